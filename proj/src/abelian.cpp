#include "schurpair/abelian.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace schurpair {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::ExponentCapExceeded: return "ExponentCapExceeded";
    case ErrorKind::NotAPGroup: return "NotAPGroup";
    case ErrorKind::InfiniteGroup: return "InfiniteGroup";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::PrimeConstraintViolation: return "PrimeConstraintViolation";
    case ErrorKind::MissingFixture: return "MissingFixture";
    case ErrorKind::InvalidFixture: return "InvalidFixture";
    case ErrorKind::UnknownAbelianization: return "UnknownAbelianization";
    case ErrorKind::UnknownMultiplier: return "UnknownMultiplier";
    case ErrorKind::NegativeT: return "NegativeT";
    case ErrorKind::OutsideUniverse: return "OutsideUniverse";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::TwoNonabelianBases: return "TwoNonabelianBases";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void require_same_prime(const AbelianPGroup& a, const AbelianPGroup& b) {
  if (a.prime() != b.prime()) {
    throw Error(ErrorKind::PrimeMismatch, "p=" + std::to_string(a.prime().value()) +
                                              " vs p=" + std::to_string(b.prime().value()));
  }
}

}  // namespace

// Miller-Rabin with the first twelve prime bases is exact below 3.3e24.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) throw Error(ErrorKind::InvalidPrime, std::to_string(value) + " is not prime");
}

Partition canonical_partition(Partition parts, int cap) {
  for (int e : parts) {
    if (e <= 0) throw Error(ErrorKind::InvalidArgument, "partition parts must be positive");
    if (e > cap) {
      throw Error(ErrorKind::ExponentCapExceeded,
                  "exponent " + std::to_string(e) + " exceeds cap " + std::to_string(cap));
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

std::string partition_to_string(const Partition& parts) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  out << ']';
  return out.str();
}

AbelianPGroup::AbelianPGroup(Prime p, Partition exps, int cap)
    : p_(p), exps_(canonical_partition(std::move(exps), cap)) {}

AbelianPGroup AbelianPGroup::elementary(Prime p, int rank) {
  return AbelianPGroup(p, Partition(static_cast<std::size_t>(rank), 1));
}

bool AbelianPGroup::is_elementary() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 1; });
}

int order_exponent(const AbelianPGroup& a) {
  int sum = 0;
  for (int e : a.exps()) sum += e;
  return sum;
}

int rank(const AbelianPGroup& a) { return static_cast<int>(a.exps().size()); }

AbelianPGroup direct_product(const AbelianPGroup& a, const AbelianPGroup& b) {
  require_same_prime(a, b);
  Partition merged = a.exps();
  merged.insert(merged.end(), b.exps().begin(), b.exps().end());
  return AbelianPGroup(a.prime(), std::move(merged));
}

AbelianPGroup tensor(const AbelianPGroup& a, const AbelianPGroup& b) {
  require_same_prime(a, b);
  Partition parts;
  parts.reserve(a.exps().size() * b.exps().size());
  for (int x : a.exps()) {
    for (int y : b.exps()) parts.push_back(std::min(x, y));
  }
  return AbelianPGroup(a.prime(), std::move(parts));
}

AbelianPGroup exterior_square(const AbelianPGroup& a) {
  const auto& e = a.exps();
  Partition parts;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) parts.push_back(std::min(e[i], e[j]));
  }
  return AbelianPGroup(a.prime(), std::move(parts));
}

AbelianPGroup multiplier_abelian(const AbelianPGroup& a) { return exterior_square(a); }

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::span<const long> values)
    : IntMatrix(rows, cols) {
  if (values.size() != rows * cols) throw std::invalid_argument("IntMatrix: value count mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) data_[i] = values[i];
}

IntMatrix IntMatrix::diagonal(std::span<const long> values) {
  IntMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(src, c) != 0) (*this)(dst, c) += factor * (*this)(src, c);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, src) != 0) (*this)(r, dst) += factor * (*this)(r, src);
  }
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| of the trailing block starting at (k, k); scanning
// row-major with a strict comparison keeps the lowest (row, col) on ties.
std::optional<Pivot> find_pivot(const IntMatrix& m, std::size_t k) {
  std::optional<Pivot> best;
  mpz_class best_abs;
  for (std::size_t r = k; r < m.rows(); ++r) {
    for (std::size_t c = k; c < m.cols(); ++c) {
      const mpz_class& v = m(r, c);
      if (v == 0) continue;
      mpz_class a = abs(v);
      if (!best || a < best_abs) {
        best = Pivot{r, c};
        best_abs = a;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<mpz_class> smith_normal_form(IntMatrix m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<mpz_class> diag;
  diag.reserve(n);
  std::size_t k = 0;
  for (; k < n; ++k) {
    for (;;) {
      auto pivot = find_pivot(m, k);
      if (!pivot) break;
      m.swap_rows(k, pivot->row);
      m.swap_cols(k, pivot->col);

      bool clean = true;
      for (std::size_t r = k + 1; r < m.rows(); ++r) {
        if (m(r, k) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), m(r, k).get_mpz_t(), m(k, k).get_mpz_t());
        m.add_row_multiple(r, k, -q);
        if (m(r, k) != 0) clean = false;
      }
      for (std::size_t c = k + 1; c < m.cols(); ++c) {
        if (m(k, c) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), m(k, c).get_mpz_t(), m(k, k).get_mpz_t());
        m.add_col_multiple(c, k, -q);
        if (m(k, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column k are clear; enforce divisibility of the trailing block.
      bool divisible = true;
      for (std::size_t r = k + 1; r < m.rows() && divisible; ++r) {
        for (std::size_t c = k + 1; c < m.cols(); ++c) {
          if (m(r, c) != 0 && !mpz_divisible_p(m(r, c).get_mpz_t(), m(k, k).get_mpz_t())) {
            m.add_row_multiple(k, r, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (m(k, k) == 0) break;
    diag.push_back(abs(m(k, k)));
  }
  diag.resize(n, mpz_class(0));
  return diag;
}

AbelianPGroup from_relation_matrix(const IntMatrix& m, Prime p) {
  if (m.cols() > m.rows()) {
    throw Error(ErrorKind::InfiniteGroup, "fewer relations than generators");
  }
  const auto invariants = smith_normal_form(m);
  const mpz_class prime(static_cast<unsigned long>(p.value()));
  Partition parts;
  for (const auto& d : invariants) {
    if (d == 0) throw Error(ErrorKind::InfiniteGroup, "zero invariant factor");
    if (d == 1) continue;
    mpz_class rest = d;
    int e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), prime.get_mpz_t())) {
      rest /= prime;
      ++e;
    }
    if (rest != 1) {
      throw Error(ErrorKind::NotAPGroup,
                  "invariant " + d.get_str() + " is not a power of " + std::to_string(p.value()));
    }
    parts.push_back(e);
  }
  return AbelianPGroup(p, std::move(parts));
}

}  // namespace schurpair
