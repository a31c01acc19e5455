#pragma once

// Finite abelian p-groups stored as elementary-divisor exponent partitions:
// the group  Z_{p^e1} x Z_{p^e2} x ...  is the descending list {e1, e2, ...}.
// Orders are always carried as exponents of p, never as magnitudes.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "schurpair/error.hpp"

namespace schurpair {

inline constexpr int kDefaultExponentCap = 64;

bool is_prime(std::uint64_t n);

class Prime {
 public:
  /// Throws Error(InvalidPrime) unless value passes a deterministic primality test.
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }

  auto operator<=>(const Prime&) const = default;

 private:
  std::uint64_t value_;
};

/// Descending list of positive exponents, independent of the prime.
using Partition = std::vector<int>;

/// Sorts descending and rejects non-positive parts or parts above cap.
Partition canonical_partition(Partition parts, int cap = kDefaultExponentCap);

std::string partition_to_string(const Partition& parts);

class AbelianPGroup {
 public:
  /// Trivial group.
  explicit AbelianPGroup(Prime p) : p_(p) {}
  AbelianPGroup(Prime p, Partition exps, int cap = kDefaultExponentCap);

  static AbelianPGroup elementary(Prime p, int rank);

  Prime prime() const noexcept { return p_; }
  const Partition& exps() const noexcept { return exps_; }
  bool is_trivial() const noexcept { return exps_.empty(); }
  bool is_elementary() const noexcept;

  bool operator==(const AbelianPGroup&) const = default;

 private:
  Prime p_;
  Partition exps_;
};

/// log_p |A|.
int order_exponent(const AbelianPGroup& a);
/// Minimal number of generators.
int rank(const AbelianPGroup& a);

AbelianPGroup direct_product(const AbelianPGroup& a, const AbelianPGroup& b);

/// A (x) B via  Z_{p^a} (x) Z_{p^b} = Z_{p^min(a,b)}.
AbelianPGroup tensor(const AbelianPGroup& a, const AbelianPGroup& b);

/// Parts min(a_i, a_j) over i < j.
AbelianPGroup exterior_square(const AbelianPGroup& a);

/// The Schur multiplier of an abelian group is its exterior square.
AbelianPGroup multiplier_abelian(const AbelianPGroup& a);

/// Dense exact integer matrix; rows are relations, columns generators when
/// used as a presentation.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::span<const long> values);

  static IntMatrix diagonal(std::span<const long> values);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Diagonal invariants d_1 | d_2 | ... of length min(rows, cols); nonnegative,
/// zeros trailing. Pivot: smallest nonzero |entry|, ties to lowest (row, col).
std::vector<mpz_class> smith_normal_form(IntMatrix m);

/// Cokernel Z^cols / rowspace(m) as an exponent partition.
/// Throws NotAPGroup if an invariant has a prime factor other than p, and
/// InfiniteGroup if the cokernel has a free part.
AbelianPGroup from_relation_matrix(const IntMatrix& m, Prime p);

}  // namespace schurpair
