// One line per acceptance criterion: "ACn PASS|FAIL <title> (<detail>) [<seconds>]".
// The process exits non-zero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "schurpair/verification.hpp"

using namespace schurpair;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

const std::vector<Prime> kPrimes = {Prime(2), Prime(3), Prime(5)};

const Catalog& shipped() {
  static const Catalog c = Catalog::load(Catalog::default_fixtures_path());
  return c;
}

std::string summarize(const SweepReport& r, std::size_t shown = 5) {
  std::ostringstream s;
  s << r.instances << " instances, " << r.failures.size() << " failures, " << r.excluded << " excluded";
  for (std::size_t i = 0; i < r.failures.size() && i < shown; ++i) {
    const auto& f = r.failures[i];
    s << "\n      " << f.instance << ": expected " << f.expected << ", got " << f.actual;
  }
  if (r.failures.size() > shown) s << "\n      ... " << (r.failures.size() - shown) << " more";
  return s.str();
}

Outcome abelian_set(int t, const std::vector<Partition>& expected) {
  Outcome o{true, ""};
  for (Prime p : kPrimes) {
    const auto got = abelian_partitions_with_t(p, 8, t);
    if (got != expected) {
      o.ok = false;
      o.detail += "p=" + std::to_string(p.value()) + " differs; ";
    }
  }
  if (o.ok) o.detail = "p in {2,3,5}, n <= 8";
  return o;
}

Outcome soundness(MainTheorem th) {
  SweepConfig cfg;
  cfg.max_total_exp = 7;
  const auto r = main_theorem_soundness(th, shipped(), cfg);
  return {r.passed(), summarize(r)};
}

Outcome completeness() {
  SweepConfig cfg;
  cfg.max_total_exp = 6;
  cfg.jobs = 4;
  bool ok = true;
  std::string detail;
  for (auto th : {MainTheorem::TFour, MainTheorem::TFive}) {
    const auto r = main_theorem_completeness(th, shipped(), cfg);
    ok = ok && r.passed() && r.excluded == 0;
    detail += "\n    " + std::string(label(th)) + ": " + summarize(r, 20) + ", " + std::to_string(r.overlaps.size()) +
              " overlaps";
  }
  return {ok, detail};
}

GroupSpec product(const std::string& id, Prime p, Partition tail) {
  return GroupSpec::product(shipped().lookup(id, p), AbelianPGroup(p, std::move(tail)));
}

Outcome spot_values() {
  std::vector<std::string> bad;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) bad.push_back(what);
  };
  const Prime two(2);
  expect(multiplier_of_spec(product("Q8", two, {1})).exponent() == 2, "|M(Q8 x Z2)| = 2^2");
  expect(multiplier_of_spec(product("D8", two, {1, 1})).exponent() == 6, "|M(D8 x Z2^(2))| = 2^6");
  for (Prime p : {Prime(3), Prime(5)}) {
    expect(multiplier_of_spec(product("E1", p, {1, 1, 1})).exponent() == 11,
           "|M(E1 x Zp^(3))| = p^11 at p=" + std::to_string(p.value()));
  }
  expect(pair_multiplier_order(PairSpec(product("Q8", two, {}), GroupSpec::abelian(AbelianPGroup(two, {1})))).t == 4,
         "t(Q8, Z2) = 4");
  for (Prime p : {Prime(3), Prime(5)}) {
    const PairSpec pair(product("E1", p, {}), GroupSpec::abelian(AbelianPGroup(p, {1, 1, 1})));
    expect(pair_multiplier_order(pair).t == 4, "t(E1, Zp^(3)) = 4 at p=" + std::to_string(p.value()));
  }
  std::string detail = bad.empty() ? "all 7 values match" : "";
  for (const auto& b : bad) detail += "mismatch: " + b + "; ";
  return {bad.empty(), detail};
}

Outcome sweep_outcome(const SweepReport& r) { return {r.passed(), summarize(r)}; }

Outcome fixture_gate() {
  std::vector<std::string> bad;
  int checked = 0;
  for (const auto& id : shipped().ids()) {
    const auto& e = shipped().entry(id);
    for (Prime p : kPrimes) {
      if (!admits(e.constraint, p)) continue;
      ++checked;
      const int t = t_single(product(id, p, {}));
      if (t != e.source_t) bad.push_back(id + "@" + std::to_string(p.value()));
    }
  }
  // A tampered entry must be refused at load time.
  bool refused = false;
  try {
    Catalog::from_json_text(
        R"({"schema": "schurpair-fixtures/1", "entries": {"D16": {"p_constraint": "p=2", "order_exp": 4,
           "ab": [1, 1], "mult": {"structure": [1, 1]}}}})");
  } catch (const Error& e) {
    refused = e.kind() == ErrorKind::InvalidFixture;
  }
  if (!refused) bad.push_back("tampered D16 accepted");
  std::string detail = std::to_string(checked) + " (entry, prime) instances checked";
  for (const auto& b : bad) detail += "; bad " + b;
  return {bad.empty(), detail};
}

}  // namespace

int main() {
  struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> check;
  };

  const std::vector<Criterion> criteria = {
      {"AC1", "abelian t=4 set is {[2,2],[2,1,1,1]}", 1,
       [] { return abelian_set(4, {{2, 2}, {2, 1, 1, 1}}); }},
      {"AC2", "abelian t=5 set is {[3,1],[2,1,1,1,1]}", 1,
       [] { return abelian_set(5, {{3, 1}, {2, 1, 1, 1, 1}}); }},
      {"AC3", "Main Thm 2.1 soundness (t=4, total <= 7)", 60, [] { return soundness(MainTheorem::TFour); }},
      {"AC4", "Main Thm 2.2 soundness (t=5, total <= 7)", 60, [] { return soundness(MainTheorem::TFive); }},
      {"AC5", "completeness within universe (total <= 6)", 300, completeness},
      {"AC6", "spot values", 5, spot_values},
      {"AC7", "tensor min-formula equals SNF oracle", 10,
       [] { return sweep_outcome(tensor_snf_cross_check(SweepConfig{})); }},
      {"AC8", "additivity t(NxK) = t_pair + t(K), p in {2,3}, total <= 7", 120,
       [] {
         SweepConfig cfg;
         cfg.primes = {Prime(2), Prime(3)};
         cfg.max_total_exp = 7;
         return sweep_outcome(additivity_sweep(shipped(), cfg));
       }},
      {"AC9", "elementary-abelian identity t = n(m - d(K))", 30,
       [] { return sweep_outcome(elementary_abelian_identity_sweep(shipped(), SweepConfig{})); }},
      {"AC10", "fixture gate", 5, fixture_gate},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.ok = false;
      o.detail += "; exceeded time limit";
    }
    if (!o.ok) ++failed;
    std::cout << c.id << ' ' << (o.ok ? "PASS" : "FAIL") << ' ' << c.title << " [" << std::fixed
              << std::setprecision(2) << secs << "s] (" << o.detail << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
