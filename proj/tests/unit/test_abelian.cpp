#include <doctest.h>

#include <vector>

#include "schurpair/abelian.hpp"

using namespace schurpair;

namespace {

AbelianPGroup G(unsigned p, Partition parts) { return AbelianPGroup(Prime(p), std::move(parts)); }

IntMatrix matrix(std::size_t rows, std::size_t cols, std::vector<long> values) {
  return IntMatrix(rows, cols, values);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(1'000'000'007ULL));
  CHECK(is_prime(2305843009213693951ULL));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(561));
  CHECK(kind_of([] { Prime(4); }) == ErrorKind::InvalidPrime);
  CHECK(kind_of([] { Prime(1); }) == ErrorKind::InvalidPrime);
}

TEST_CASE("canonical partitions") {
  CHECK(canonical_partition({1, 3, 2}) == Partition{3, 2, 1});
  CHECK(canonical_partition({}).empty());
  CHECK(kind_of([] { canonical_partition({2, 0}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { canonical_partition({65}); }) == ErrorKind::ExponentCapExceeded);
  CHECK(canonical_partition({5}, 5) == Partition{5});
  CHECK(partition_to_string({2, 1}) == "[2,1]");
  CHECK(partition_to_string({}) == "[]");
}

TEST_CASE("group basics") {
  CHECK(G(2, {}).is_trivial());
  CHECK(G(3, {1, 1, 1}).is_elementary());
  CHECK_FALSE(G(3, {2, 1}).is_elementary());
  CHECK(AbelianPGroup::elementary(Prime(5), 3) == G(5, {1, 1, 1}));
  CHECK(order_exponent(G(2, {3, 2})) == 5);
  CHECK(rank(G(2, {3, 2})) == 2);
  CHECK(direct_product(G(2, {1}), G(2, {3, 1})) == G(2, {3, 1, 1}));
  CHECK(kind_of([] { direct_product(G(2, {1}), G(3, {1})); }) == ErrorKind::PrimeMismatch);
}

TEST_CASE("tensor and exterior square") {
  CHECK(tensor(G(2, {1}), G(2, {1})) == G(2, {1}));
  CHECK(tensor(G(3, {3, 2}), G(3, {2, 1})) == G(3, {2, 2, 1, 1}));
  CHECK(tensor(G(5, {}), G(5, {4, 2})).is_trivial());
  CHECK(kind_of([] { tensor(G(2, {1}), G(3, {1})); }) == ErrorKind::PrimeMismatch);
  CHECK(exterior_square(G(2, {2, 2})) == G(2, {2}));
  CHECK(exterior_square(G(2, {3})).is_trivial());
  CHECK(multiplier_abelian(G(3, {1, 1, 1})) == G(3, {1, 1, 1}));
  CHECK(order_exponent(multiplier_abelian(G(3, {2, 1, 1, 1}))) == 3 + 3);
}

TEST_CASE("smith normal form") {
  auto d = smith_normal_form(matrix(2, 2, {2, 4, 6, 8}));
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);

  d = smith_normal_form(matrix(2, 3, {0, 0, 0, 0, 0, 0}));
  CHECK(d == std::vector<mpz_class>{0, 0});

  d = smith_normal_form(matrix(3, 2, {4, 0, 0, 6, 0, 0}));
  CHECK(d == std::vector<mpz_class>{2, 12});

  d = smith_normal_form(IntMatrix::identity(3));
  CHECK(d == std::vector<mpz_class>{1, 1, 1});
}

TEST_CASE("cokernel of a relation matrix") {
  const Prime two(2);
  CHECK(from_relation_matrix(matrix(2, 2, {4, 0, 0, 2}), two) == G(2, {2, 1}));
  CHECK(from_relation_matrix(matrix(2, 2, {2, 1, 0, 2}), two) == G(2, {2}));
  CHECK(from_relation_matrix(IntMatrix::identity(2), two).is_trivial());
  CHECK(from_relation_matrix(IntMatrix(0, 0), two).is_trivial());
  CHECK(kind_of([&] { from_relation_matrix(matrix(1, 2, {2, 2}), two); }) == ErrorKind::InfiniteGroup);
  CHECK(kind_of([&] { from_relation_matrix(matrix(2, 2, {2, 0, 0, 0}), two); }) == ErrorKind::InfiniteGroup);
  CHECK(kind_of([&] { from_relation_matrix(matrix(1, 1, {6}), two); }) == ErrorKind::NotAPGroup);
}
