#include "schurpair/pair.hpp"

namespace schurpair {

PairSpec::PairSpec(GroupSpec n, GroupSpec k) : n_(std::move(n)), k_(std::move(k)) {
  if (n_.prime() != k_.prime()) throw Error(ErrorKind::PrimeMismatch, "N and K use different primes");
}

int pair_bound_exponent(int n, int m) {
  if (n < 0 || m < 0) throw Error(ErrorKind::InvalidArgument, "negative order exponent");
  // n and n-1 have opposite parity, so the product is even.
  return n * (2 * m + n - 1) / 2;
}

PairReport pair_multiplier_order(const PairSpec& pair) {
  const GroupSpec& n_spec = pair.normal();
  const GroupSpec& k_spec = pair.complement();
  PairReport r;
  r.n = order_exponent_spec(n_spec);
  r.m = order_exponent_spec(k_spec);
  r.bound_exp = pair_bound_exponent(r.n, r.m);

  const MultiplierData m_n = multiplier_of_spec(n_spec);
  AbelianPGroup cross(pair.prime());
  if (!n_spec.is_trivial() && !k_spec.is_trivial()) {
    cross = tensor(abelianization(n_spec), abelianization(k_spec));
  }
  r.pair_mult_exp = m_n.exponent() + order_exponent(cross);
  r.structure = m_n.is_full() ? MultiplierData::full(direct_product(*m_n.structure(), cross))
                              : MultiplierData::order_only(r.pair_mult_exp);
  r.t = r.bound_exp - r.pair_mult_exp;
  if (r.t < 0) {
    throw Error(ErrorKind::NegativeT, "pair (" + to_expr(n_spec) + ", " + to_expr(k_spec) +
                                          ") exceeds the pair bound; fixture data is inconsistent");
  }
  return r;
}

int t_single(const GroupSpec& s) {
  const int n = order_exponent_spec(s);
  const int t = n * (n - 1) / 2 - multiplier_of_spec(s).exponent();
  if (t < 0) {
    throw Error(ErrorKind::NegativeT, to_expr(s) + " exceeds the multiplier bound; fixture data is inconsistent");
  }
  return t;
}

GroupSpec fold_product(const GroupSpec& n, const GroupSpec& k) {
  if (n.base() && k.base()) {
    throw Error(ErrorKind::OutsideUniverse, "product of two non-abelian bases: " + to_expr(n) + " and " + to_expr(k));
  }
  AbelianPGroup tail = direct_product(n.tail(), k.tail());
  if (n.base()) return GroupSpec::product(*n.base(), std::move(tail));
  if (k.base()) return GroupSpec::product(*k.base(), std::move(tail));
  return GroupSpec::abelian(std::move(tail));
}

SplitCheck ellis_split_check(const PairSpec& pair) {
  SplitCheck c;
  c.product_mult_exp = multiplier_of_spec(fold_product(pair.normal(), pair.complement())).exponent();
  c.pair_mult_exp = pair_multiplier_order(pair).pair_mult_exp;
  c.complement_mult_exp = multiplier_of_spec(pair.complement()).exponent();
  c.holds = c.product_mult_exp == c.pair_mult_exp + c.complement_mult_exp;
  return c;
}

}  // namespace schurpair
