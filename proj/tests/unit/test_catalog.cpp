#include <doctest.h>

#include "schurpair/catalog.hpp"

using namespace schurpair;

namespace {

const Catalog& shipped() {
  static const Catalog c = Catalog::load(Catalog::default_fixtures_path());
  return c;
}

GroupSpec product(const std::string& id, unsigned p, Partition tail) {
  return GroupSpec::product(shipped().lookup(id, Prime(p)), AbelianPGroup(Prime(p), std::move(tail)));
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

std::string one_entry(const std::string& body) {
  return R"({"schema": "schurpair-fixtures/1", "entries": {"Q8": )" + body + "}}";
}

}  // namespace

TEST_CASE("prime constraints") {
  CHECK(admits(PrimeConstraint::TwoOnly, Prime(2)));
  CHECK_FALSE(admits(PrimeConstraint::TwoOnly, Prime(3)));
  CHECK(admits(PrimeConstraint::Odd, Prime(7)));
  CHECK_FALSE(admits(PrimeConstraint::OddNotThree, Prime(3)));
  CHECK(admits(PrimeConstraint::ThreeOnly, Prime(3)));
  for (auto c : {PrimeConstraint::Any, PrimeConstraint::TwoOnly, PrimeConstraint::Odd, PrimeConstraint::ThreeOnly,
                 PrimeConstraint::OddNotThree}) {
    CHECK(parse_prime_constraint(to_string(c)) == c);
  }
  CHECK(kind_of([] { parse_prime_constraint("even"); }) == ErrorKind::InvalidFixture);
}

TEST_CASE("registry") {
  const Catalog reg = Catalog::registry_only();
  for (const char* id : {"D8", "Q8", "D16", "E1", "E2", "E4", "ES_p5_expP", "ES_p5_expP2", "thm4_3", "thm4_4",
                         "thm4_7", "thm4_9", "thm4_10", "thm4_11", "thm5_6", "thm5_7", "thm5_8", "thm5_9", "thm5_10",
                         "thm5_12", "thm5_14", "thm5_15"}) {
    CHECK_MESSAGE(reg.contains(id), id);
  }
  CHECK(kind_of([&] { reg.entry("nope"); }) == ErrorKind::UnknownId);
  CHECK(kind_of([&] { reg.lookup("Q8", Prime(2)); }) == ErrorKind::MissingFixture);
}

TEST_CASE("shipped fixtures are complete and consistent") {
  const Catalog& c = shipped();
  for (const auto& id : c.ids()) {
    const auto& e = c.entry(id);
    CHECK_MESSAGE(e.fixture_complete(), id);
    const int n = *e.order_exp;
    CHECK_MESSAGE(n * (n - 1) / 2 - *e.mult_exp == e.source_t, id);
  }
  CHECK(*c.entry("Q8").ab == Partition{1, 1});
  CHECK(c.entry("Q8").mult_exp == 0);
  CHECK(*c.entry("E1").mult_structure == Partition{1, 1});
}

TEST_CASE("lookup respects prime constraints") {
  CHECK(kind_of([] { shipped().lookup("Q8", Prime(3)); }) == ErrorKind::PrimeConstraintViolation);
  CHECK(kind_of([] { shipped().lookup("E1", Prime(2)); }) == ErrorKind::PrimeConstraintViolation);
  CHECK(kind_of([] { shipped().lookup("thm4_11", Prime(3)); }) == ErrorKind::PrimeConstraintViolation);
  CHECK(kind_of([] { shipped().lookup("Z8", Prime(2)); }) == ErrorKind::UnknownId);
  const BaseGroup e1 = shipped().lookup("E1", Prime(5));
  CHECK(e1.order_exp == 3);
  CHECK(e1.p == Prime(5));
}

TEST_CASE("fixture validation") {
  CHECK_NOTHROW(Catalog::from_json_text(one_entry(R"({"p_constraint": "p=2", "order_exp": 3, "ab": [1, 1],
                                                     "mult": {"order_exp": 0}})")));
  // t would be 2, but Q8 is listed at t=3.
  CHECK(kind_of([] {
          Catalog::from_json_text(one_entry(R"({"p_constraint": "p=2", "order_exp": 3, "mult": {"structure": [1]}})"));
        }) == ErrorKind::InvalidFixture);
  CHECK(kind_of([] { Catalog::from_json_text(one_entry(R"({"p_constraint": "odd", "order_exp": 3})")); }) ==
        ErrorKind::InvalidFixture);
  CHECK(kind_of([] {
          Catalog::from_json_text(one_entry(R"({"p_constraint": "p=2", "order_exp": 3, "ab": [2, 1]})"));
        }) == ErrorKind::InvalidFixture);
  CHECK(kind_of([] { Catalog::from_json_text(R"({"schema": "other", "entries": {}})"); }) == ErrorKind::InvalidFixture);
  CHECK(kind_of([] {
          Catalog::from_json_text(R"({"schema": "schurpair-fixtures/1", "entries": {"Z9": {}}})");
        }) == ErrorKind::InvalidFixture);
  CHECK(kind_of([] { Catalog::from_json_text("{not json"); }) == ErrorKind::InvalidFixture);
  CHECK(kind_of([] { Catalog::load("/nonexistent/fixtures.json"); }) == ErrorKind::MissingFixture);
}

TEST_CASE("partial fixtures leave fields unknown") {
  const Catalog c =
      Catalog::from_json_text(one_entry(R"({"p_constraint": "p=2", "order_exp": 3, "mult": {"order_exp": 0}})"));
  const GroupSpec q8 = GroupSpec::product(c.lookup("Q8", Prime(2)), AbelianPGroup(Prime(2)));
  CHECK(multiplier_of_spec(q8).exponent() == 0);
  CHECK_FALSE(multiplier_of_spec(q8).is_full());
  const GroupSpec q8z = GroupSpec::product(c.lookup("Q8", Prime(2)), AbelianPGroup(Prime(2), {1}));
  CHECK(kind_of([&] { multiplier_of_spec(q8z); }) == ErrorKind::UnknownAbelianization);
  CHECK(kind_of([&] { rank_spec(q8); }) == ErrorKind::UnknownAbelianization);
}

TEST_CASE("multiplier of a spec") {
  CHECK(multiplier_of_spec(product("D8", 2, {1, 1})).exponent() == 6);
  CHECK(multiplier_of_spec(product("Q8", 2, {1})).exponent() == 2);
  const auto abelian = multiplier_of_spec(GroupSpec::abelian(AbelianPGroup(Prime(3), {2, 2})));
  REQUIRE(abelian.is_full());
  CHECK(abelian.structure()->exps() == Partition{2});
  for (unsigned p : {3u, 5u}) CHECK(multiplier_of_spec(product("E1", p, {1, 1, 1})).exponent() == 11);
}

TEST_CASE("product formula is associative over tails") {
  for (const auto& id : shipped().ids()) {
    const auto& e = shipped().entry(id);
    for (unsigned p : {2u, 3u, 5u}) {
      if (!admits(e.constraint, Prime(p))) continue;
      for (const Partition& tail : {Partition{1}, Partition{2, 1}, Partition{1, 1, 1}, Partition{3, 1}}) {
        const auto direct = multiplier_of_spec(product(id, p, tail)).exponent();
        int stepwise = multiplier_of_spec(product(id, p, {})).exponent();
        Partition done;
        for (int part : tail) {
          // M(X x Z) = M(X) x (X^ab (x) Z) since M(Z) is trivial for cyclic Z.
          const GroupSpec x = product(id, p, done);
          stepwise += order_exponent(tensor(abelianization(x), AbelianPGroup(Prime(p), {part})));
          done.push_back(part);
        }
        CHECK_MESSAGE(direct == stepwise, id << " x " << partition_to_string(tail));
      }
    }
  }
}

TEST_CASE("order, rank and text of specs") {
  const GroupSpec s = product("E1", 3, {1, 1, 1});
  CHECK(order_exponent_spec(s) == 6);
  CHECK(rank_spec(s) == 5);
  const GroupSpec trivial = GroupSpec::trivial(Prime(2));
  CHECK(order_exponent_spec(trivial) == 0);
  CHECK(rank_spec(trivial) == 0);
  CHECK(rank_spec(product("Q8", 2, {})) == 2);
  CHECK(to_expr(trivial) == "1");
  CHECK(to_expr(product("E1", 3, {2, 1, 1, 1})) == "E1 x Z(p^2) x Z(p)^(3)");
  CHECK(kind_of([] {
          GroupSpec::product(shipped().lookup("E1", Prime(3)), AbelianPGroup(Prime(5), {1}));
        }) == ErrorKind::PrimeMismatch);
}
