#pragma once

// Multipliers of pairs (G, N) with G = N x K. For such a pair
//
//   |M(G,N)| = |M(N)| * |N^ab (x) K^ab|,
//
// and with |N| = p^n, |K| = p^m the order is p^{n(2m+n-1)/2 - t} for some t >= 0.

#include "schurpair/catalog.hpp"

namespace schurpair {

class PairSpec {
 public:
  /// Throws PrimeMismatch if n and k are instantiated at different primes.
  PairSpec(GroupSpec n, GroupSpec k);

  const GroupSpec& normal() const noexcept { return n_; }
  const GroupSpec& complement() const noexcept { return k_; }
  Prime prime() const noexcept { return n_.prime(); }

  bool operator==(const PairSpec&) const = default;

 private:
  GroupSpec n_;
  GroupSpec k_;
};

struct PairReport {
  int n = 0;
  int m = 0;
  int pair_mult_exp = 0;
  int bound_exp = 0;
  int t = 0;
  MultiplierData structure = MultiplierData::order_only(0);
};

int pair_bound_exponent(int n, int m);

PairReport pair_multiplier_order(const PairSpec& pair);

/// n(n-1)/2 - log_p |M(S)|. Throws NegativeT if the data violates the bound.
int t_single(const GroupSpec& s);

/// N x K as a single spec; throws OutsideUniverse if both carry a catalog base.
GroupSpec fold_product(const GroupSpec& n, const GroupSpec& k);

struct SplitCheck {
  bool holds = false;
  int product_mult_exp = 0;     // log_p |M(N x K)|
  int pair_mult_exp = 0;        // log_p |M(G,N)|
  int complement_mult_exp = 0;  // log_p |M(K)|
};

/// Checks M(G) = M(G,N) x M(K) at the level of orders.
SplitCheck ellis_split_check(const PairSpec& pair);

}  // namespace schurpair
