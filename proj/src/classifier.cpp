#include "schurpair/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "schurpair/partitions.hpp"

namespace schurpair {

namespace {

using Kind = ComplementPattern::Kind;

Shape abelian_shape(Partition tail) { return Shape{{}, std::move(tail), false}; }
Shape base_shape(std::string id, Partition tail = {}) { return Shape{{std::move(id)}, std::move(tail), false}; }

ComplementPattern exact(Shape s) { return ComplementPattern{Kind::Exact, std::move(s), 0}; }
ComplementPattern trivial_k() { return exact(abelian_shape({})); }
ComplementPattern rank_deficit(int c) { return ComplementPattern{Kind::RankDeficit, {}, c}; }

const std::vector<std::string> kExtraspecialP5 = {"ES_p5_expP", "ES_p5_expP2", "ES_2_5_plus", "ES_2_5_minus"};
const std::vector<std::string> kExtraspecialP3 = {"E1", "E2", "D8", "Q8"};

constexpr auto kAny = PrimeConstraint::Any;
constexpr auto kTwo = PrimeConstraint::TwoOnly;
constexpr auto kOdd = PrimeConstraint::Odd;
constexpr auto kThree = PrimeConstraint::ThreeOnly;
constexpr auto kNotThree = PrimeConstraint::OddNotThree;

std::vector<FamilyCase> build_t4_cases() {
  const auto th = MainTheorem::TFour;
  const Partition zp = {1};
  return {
      {th, 1, abelian_shape({1}), rank_deficit(4), kAny},
      {th, 2, abelian_shape({1, 1}), rank_deficit(2), kAny},
      {th, 3, abelian_shape({1, 1, 1, 1}), rank_deficit(1), kAny},
      {th, 4, base_shape("D8", {1, 1}), trivial_k(), kTwo},
      {th, 5, base_shape("Q8", {1}), trivial_k(), kTwo},
      {th, 6, base_shape("thm4_3"), trivial_k(), kTwo},
      {th, 7, base_shape("thm4_4"), trivial_k(), kTwo},
      {th, 8, base_shape("E4"), trivial_k(), kOdd},
      {th, 9, base_shape("E1", {1, 1, 1}), trivial_k(), kOdd},
      {th, 10, base_shape("thm4_7"), trivial_k(), kOdd},
      {th, 11, base_shape("E2", {1}), trivial_k(), kOdd},
      {th, 12, base_shape("thm4_9"), trivial_k(), kOdd},
      {th, 13, base_shape("thm4_10"), trivial_k(), kThree},
      {th, 14, base_shape("thm4_11"), trivial_k(), kNotThree},
      {th, 15, abelian_shape({2, 2}), trivial_k(), kAny},
      {th, 16, abelian_shape({2, 1, 1, 1}), trivial_k(), kAny},
      {th, 17, abelian_shape({2, 1, 1}), exact(abelian_shape(zp)), kAny},
      {th, 18, base_shape("Q8"), exact(abelian_shape(zp)), kTwo},
      {th, 19, base_shape("E2"), exact(abelian_shape(zp)), kOdd},
      {th, 20, base_shape("D8", {1}), exact(abelian_shape(zp)), kTwo},
      {th, 21, base_shape("E1", {1, 1}), exact(abelian_shape(zp)), kOdd},
      {th, 22, abelian_shape({2, 1}), exact(abelian_shape({1, 1})), kAny},
      {th, 23, base_shape("D8"), exact(abelian_shape({1, 1})), kTwo},
      {th, 24, base_shape("E1", {1}), exact(abelian_shape({1, 1})), kOdd},
      {th, 25, abelian_shape({2}), exact(abelian_shape({2, 1})), kAny},
      {th, 26, base_shape("E1"), exact(abelian_shape({1, 1, 1})), kOdd},
      {th, 27, abelian_shape({2}), exact(abelian_shape({1, 1, 1})), kAny},
  };
}

std::vector<FamilyCase> build_t5_cases() {
  const auto th = MainTheorem::TFive;
  const Partition zp = {1};
  return {
      {th, 1, abelian_shape({1}), rank_deficit(5), kAny},
      {th, 2, abelian_shape({1, 1, 1, 1, 1}), rank_deficit(1), kAny},
      {th, 3, base_shape("D8", {1, 1, 1}), trivial_k(), kTwo},
      {th, 4, base_shape("E1", {1, 1, 1, 1}), trivial_k(), kOdd},
      {th, 5, base_shape("E2", {1, 1}), trivial_k(), kOdd},
      {th, 6, base_shape("E4", {1}), trivial_k(), kOdd},
      {th, 7, Shape{kExtraspecialP5, {}, false}, trivial_k(), kAny},
      {th, 8, base_shape("thm5_6"), trivial_k(), kOdd},
      {th, 9, base_shape("thm5_7"), trivial_k(), kOdd},
      {th, 10, base_shape("thm5_8"), trivial_k(), kNotThree},
      {th, 11, base_shape("thm5_9"), trivial_k(), kThree},
      {th, 12, base_shape("thm5_10"), trivial_k(), kOdd},
      {th, 13, base_shape("D16"), trivial_k(), kTwo},
      {th, 14, base_shape("thm5_12"), trivial_k(), kTwo},
      {th, 15, base_shape("Q8", {1, 1}), trivial_k(), kTwo},
      {th, 16, base_shape("thm5_14"), trivial_k(), kTwo},
      {th, 17, base_shape("thm5_15"), trivial_k(), kTwo},
      {th, 18, base_shape("thm4_4", {1}), trivial_k(), kTwo},
      {th, 19, abelian_shape({3, 1}), trivial_k(), kAny},
      {th, 20, abelian_shape({2, 1, 1, 1, 1}), trivial_k(), kAny},
      {th, 21, base_shape("D8", {1, 1}), exact(abelian_shape(zp)), kTwo},
      {th, 22, base_shape("Q8", {1}), exact(abelian_shape(zp)), kTwo},
      {th, 23, base_shape("thm4_4"), exact(abelian_shape(zp)), kTwo},
      {th, 24, base_shape("E4"), exact(abelian_shape(zp)), kOdd},
      {th, 25, base_shape("E1", {1, 1, 1}), exact(abelian_shape(zp)), kOdd},
      {th, 26, base_shape("thm4_7"), exact(abelian_shape(zp)), kOdd},
      {th, 27, base_shape("E2", {1}), exact(abelian_shape(zp)), kOdd},
      {th, 28, base_shape("E2", {1}), exact(abelian_shape(zp)), kOdd},
      {th, 29, base_shape("E1", {1, 1}), exact(abelian_shape({1, 1})), kOdd},
      {th, 30, abelian_shape({2, 1, 1}), exact(abelian_shape({1, 1})), kAny},
      {th, 31, base_shape("Q8"), exact(abelian_shape({1, 1})), kTwo},
      {th, 32, base_shape("E2"), exact(abelian_shape({1, 1})), kOdd},
      {th, 33, base_shape("D8", {1}), exact(abelian_shape({1, 1})), kTwo},
      {th, 34, base_shape("E1"), exact(abelian_shape({2})), kOdd},
      {th, 35, abelian_shape({2, 1}), exact(abelian_shape({2})), kAny},
      {th, 36, abelian_shape({2}), exact(abelian_shape({3})), kAny},
      {th, 37, base_shape("D8"), exact(abelian_shape({1, 1, 1})), kTwo},
      {th, 38, base_shape("E1", {1}), exact(abelian_shape({1, 1, 1})), kOdd},
      {th, 39, abelian_shape({2, 1}), exact(abelian_shape({1, 1, 1})), kAny},
      {th, 40, abelian_shape({2}), exact(Shape{kExtraspecialP3, {}, false}), kAny},
      {th, 41, base_shape("E1"), exact(abelian_shape({1, 1, 1, 1})), kOdd},
      // Printed as "Z(p)^(2) x Z(p)", which is Z(p)^(3) and has t=4; the
      // derivation of this case arrives at K = Z(p^2) x Z(p)^(2).
      {th, 42, abelian_shape({2}), exact(abelian_shape({2, 1, 1})), kAny},
  };
}

std::vector<SingleFamily> build_single_families() {
  const Shape any_elem{{}, {}, true};
  return {
      {"1.3", "i", 0, any_elem},
      {"1.3", "ii", 1, abelian_shape({2})},
      {"1.3", "ii", 1, base_shape("E1")},
      {"1.3", "iii", 2, abelian_shape({2, 1})},
      {"1.3", "iii", 2, base_shape("D8")},
      {"1.3", "iii", 2, base_shape("E1", {1})},
      {"1.3", "iv", 3, abelian_shape({3})},
      {"1.3", "iv", 3, abelian_shape({2, 1, 1})},
      {"1.3", "iv", 3, base_shape("Q8")},
      {"1.3", "iv", 3, base_shape("E2")},
      {"1.3", "iv", 3, base_shape("D8", {1})},
      {"1.3", "iv", 3, base_shape("E1", {1, 1})},
      {"1.4", "", 4, abelian_shape({2, 2})},
      {"1.4", "", 4, abelian_shape({2, 1, 1, 1})},
      {"1.5", "", 5, abelian_shape({3, 1})},
      {"1.5", "", 5, abelian_shape({2, 1, 1, 1, 1})},
      {"1.6", "1", 4, base_shape("D8", {1, 1})},
      {"1.6", "2", 4, base_shape("Q8", {1})},
      {"1.6", "3", 4, base_shape("thm4_3")},
      {"1.6", "4", 4, base_shape("thm4_4")},
      {"1.6", "5", 4, base_shape("E4")},
      {"1.6", "6", 4, base_shape("E1", {1, 1, 1})},
      {"1.6", "7", 4, base_shape("thm4_7")},
      {"1.6", "8", 4, base_shape("E2", {1})},
      {"1.6", "9", 4, base_shape("thm4_9")},
      {"1.6", "10", 4, base_shape("thm4_10")},
      {"1.6", "11", 4, base_shape("thm4_11")},
      {"1.7", "1", 5, base_shape("D8", {1, 1, 1})},
      {"1.7", "2", 5, base_shape("E1", {1, 1, 1, 1})},
      {"1.7", "3", 5, base_shape("E2", {1, 1})},
      {"1.7", "4", 5, base_shape("E4", {1})},
      {"1.7", "5", 5, Shape{kExtraspecialP5, {}, false}},
      {"1.7", "6", 5, base_shape("thm5_6")},
      {"1.7", "7", 5, base_shape("thm5_7")},
      {"1.7", "8", 5, base_shape("thm5_8")},
      {"1.7", "9", 5, base_shape("thm5_9")},
      {"1.7", "10", 5, base_shape("thm5_10")},
      {"1.7", "11", 5, base_shape("D16")},
      {"1.7", "12", 5, base_shape("thm5_12")},
      {"1.7", "13", 5, base_shape("Q8", {1, 1})},
      {"1.7", "14", 5, base_shape("thm5_14")},
      {"1.7", "15", 5, base_shape("thm5_15")},
      {"1.7", "16", 5, base_shape("thm4_4", {1})},
  };
}

std::string tail_text(const Partition& tail) {
  return to_expr(GroupSpec::abelian(AbelianPGroup(Prime(2), tail)));
}

std::vector<GroupSpec> expand(const Catalog& catalog, const Shape& shape, Prime p) {
  std::vector<GroupSpec> out;
  AbelianPGroup tail(p, shape.tail);
  if (shape.bases.empty()) {
    out.push_back(GroupSpec::abelian(std::move(tail)));
    return out;
  }
  for (const auto& id : shape.bases) {
    if (!admits(catalog.entry(id).constraint, p)) continue;
    out.push_back(GroupSpec::product(catalog.lookup(id, p), tail));
  }
  return out;
}

bool involves_unknowns(const GroupSpec& s) {
  return s.base() && (!s.base()->ab || !s.base()->mult);
}

}  // namespace

bool Shape::matches(const GroupSpec& s) const {
  if (any_elementary) return s.is_abelian() && s.tail().is_elementary();
  if (s.tail().exps() != tail) return false;
  if (bases.empty()) return s.is_abelian();
  return s.base() && std::find(bases.begin(), bases.end(), s.base()->id) != bases.end();
}

std::string Shape::describe() const {
  if (any_elementary) return "elementary abelian";
  std::string text = tail.empty() ? "" : tail_text(tail);
  if (bases.empty()) return text.empty() ? "1" : text;
  std::string base = bases.size() == 1 ? bases.front() : "{";
  if (bases.size() > 1) {
    for (std::size_t i = 0; i < bases.size(); ++i) base += (i ? "|" : "") + bases[i];
    base += "}";
  }
  return text.empty() ? base : base + " x " + text;
}

bool ComplementPattern::matches(const GroupSpec& k) const {
  if (kind == Kind::Exact) return shape.matches(k);
  return rank_spec(k) == order_exponent_spec(k) - deficit;
}

std::string ComplementPattern::describe() const {
  if (kind == Kind::Exact) return shape.describe();
  return "any K with d(K)=m-" + std::to_string(deficit);
}

int target_t(MainTheorem th) { return th == MainTheorem::TFour ? 4 : 5; }

std::string_view label(MainTheorem th) { return th == MainTheorem::TFour ? "2.1" : "2.2"; }

bool FamilyCase::matches(const PairSpec& pair) const {
  return admits(constraint, pair.prime()) && normal.matches(pair.normal()) &&
         complement.matches(pair.complement());
}

std::string FamilyCase::describe() const {
  return std::string(label(theorem)) + "/" + std::to_string(case_no) + ": N=" + normal.describe() +
         ", K=" + complement.describe();
}

const std::vector<FamilyCase>& main_theorem_cases(MainTheorem th) {
  static const std::vector<FamilyCase> t4 = build_t4_cases();
  static const std::vector<FamilyCase> t5 = build_t5_cases();
  return th == MainTheorem::TFour ? t4 : t5;
}

const FamilyCase& main_theorem_case(MainTheorem th, int case_no) {
  const auto& cases = main_theorem_cases(th);
  if (case_no < 1 || case_no > static_cast<int>(cases.size())) {
    throw Error(ErrorKind::UnknownId, "no case " + std::string(label(th)) + "/" + std::to_string(case_no));
  }
  return cases[static_cast<std::size_t>(case_no - 1)];
}

std::string SingleFamily::label() const {
  std::string out = "Thm " + theorem;
  if (item.empty()) return out;
  bool numeric = std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; });
  return numeric ? out + " item " + item : out + "(" + item + ")";
}

const std::vector<SingleFamily>& single_group_families() {
  static const std::vector<SingleFamily> families = build_single_families();
  return families;
}

SingleClassification classify_single_group(const GroupSpec& s) {
  SingleClassification out;
  out.t = t_single(s);
  if (out.t > 5) return out;
  for (const auto& f : single_group_families()) {
    if (f.t == out.t && f.shape.matches(s)) out.families.push_back(&f);
  }
  return out;
}

std::string CaseRef::label() const {
  return std::string(schurpair::label(theorem)) + "/" + std::to_string(case_no);
}

ClassificationResult classify_pair(const PairSpec& pair) {
  ClassificationResult out;
  out.report = pair_multiplier_order(pair);
  out.t = out.report.t;
  out.universe_caveat = involves_unknowns(pair.normal()) || involves_unknowns(pair.complement());
  if (out.t == 4 || out.t == 5) {
    const auto th = out.t == 4 ? MainTheorem::TFour : MainTheorem::TFive;
    bool rank_quantified = false;
    for (const auto& c : main_theorem_cases(th)) {
      if (c.matches(pair)) {
        out.matches.push_back({th, c.case_no});
        rank_quantified |= c.complement.kind == Kind::RankDeficit;
      }
    }
    if (rank_quantified) out.notes.push_back("d(K) condition checked over the implemented universe only");
    if (out.matches.empty()) out.notes.push_back("no listed case matches this pair");
  } else if (out.t <= 3) {
    out.notes.push_back("pair classification for t<=3 is out of scope");
  }
  if (out.universe_caveat) out.notes.push_back("involves catalog entries with unknown fixture fields");
  return out;
}

std::vector<GroupSpec> universe_specs(const Catalog& catalog, Prime p, int max_exp, UniverseStats* stats) {
  std::vector<GroupSpec> out;
  UniverseStats local;
  std::vector<std::vector<Partition>> parts_by_size;
  for (int k = 0; k <= max_exp; ++k) parts_by_size.push_back(partitions_of(k));
  for (int k = 0; k <= max_exp; ++k) {
    for (const auto& part : parts_by_size[static_cast<std::size_t>(k)]) {
      out.push_back(GroupSpec::abelian(AbelianPGroup(p, part)));
    }
  }
  for (const auto& id : catalog.ids()) {
    const auto& e = catalog.entry(id);
    if (!admits(e.constraint, p)) continue;
    if (!e.fixture_complete()) {
      ++local.excluded_bases;
      continue;
    }
    if (*e.order_exp > max_exp) continue;
    const BaseGroup base = catalog.lookup(id, p);
    for (int k = 0; k <= max_exp - base.order_exp; ++k) {
      for (const auto& part : parts_by_size[static_cast<std::size_t>(k)]) {
        out.push_back(GroupSpec::product(base, AbelianPGroup(p, part)));
      }
    }
  }
  std::vector<std::pair<std::pair<int, std::string>, std::size_t>> keys;
  keys.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keys.push_back({{order_exponent_spec(out[i]), to_expr(out[i])}, i});
  std::sort(keys.begin(), keys.end());
  std::vector<GroupSpec> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : keys) sorted.push_back(out[i]);
  local.specs = static_cast<int>(sorted.size());
  if (stats) *stats = local;
  return sorted;
}

std::string encode(const PairSpec& pair) {
  return "N=" + to_expr(pair.normal()) + ";K=" + to_expr(pair.complement());
}

void canonical_sort(std::vector<PairSpec>& pairs) {
  auto key = [](const PairSpec& ps) {
    return std::make_pair(order_exponent_spec(ps.normal()) + order_exponent_spec(ps.complement()), encode(ps));
  };
  std::vector<std::pair<std::pair<int, std::string>, std::size_t>> keys;
  keys.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) keys.push_back({key(pairs[i]), i});
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
             keys.end());
  std::vector<PairSpec> out;
  out.reserve(keys.size());
  for (const auto& [k, i] : keys) out.push_back(pairs[i]);
  pairs = std::move(out);
}

std::vector<EnumeratedPair> enumerate_pairs(const Catalog& catalog, int t_target, Prime p, int max_total_exp,
                                            int jobs, int cap) {
  if (max_total_exp > cap) {
    throw Error(ErrorKind::CapExceeded,
                "max total exponent " + std::to_string(max_total_exp) + " exceeds cap " + std::to_string(cap));
  }
  if (max_total_exp < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent budget");
  const std::vector<GroupSpec> universe = universe_specs(catalog, p, max_total_exp);

  std::vector<EnumeratedPair> found;
  std::mutex found_mutex;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    std::vector<EnumeratedPair> local;
    try {
      for (std::size_t i = next++; i < universe.size(); i = next++) {
        const GroupSpec& n = universe[i];
        const int budget = max_total_exp - order_exponent_spec(n);
        for (const GroupSpec& k : universe) {
          if (order_exponent_spec(k) > budget) break;
          PairSpec pair(n, k);
          if (pair_multiplier_order(pair).t != t_target) continue;
          local.push_back({pair, classify_pair(pair)});
        }
      }
    } catch (...) {
      std::lock_guard lock(found_mutex);
      if (!failure) failure = std::current_exception();
    }
    std::lock_guard lock(found_mutex);
    for (auto& e : local) found.push_back(std::move(e));
  };
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(found.begin(), found.end(), [](const EnumeratedPair& a, const EnumeratedPair& b) {
    const int ta = order_exponent_spec(a.pair.normal()) + order_exponent_spec(a.pair.complement());
    const int tb = order_exponent_spec(b.pair.normal()) + order_exponent_spec(b.pair.complement());
    if (ta != tb) return ta < tb;
    return encode(a.pair) < encode(b.pair);
  });
  return found;
}

std::vector<PairSpec> instantiate_case(const Catalog& catalog, const FamilyCase& c, Prime p, int max_total_exp) {
  if (!admits(c.constraint, p)) {
    throw Error(ErrorKind::PrimeConstraintViolation,
                "case " + std::string(label(c.theorem)) + "/" + std::to_string(c.case_no) + " requires " +
                    std::string(to_string(c.constraint)));
  }
  const auto normals = expand(catalog, c.normal, p);
  if (normals.empty()) {
    throw Error(ErrorKind::PrimeConstraintViolation,
                "no base of case " + std::string(label(c.theorem)) + "/" + std::to_string(c.case_no) +
                    " exists at p=" + std::to_string(p.value()));
  }
  std::vector<PairSpec> out;
  for (const auto& n : normals) {
    const int budget = max_total_exp - order_exponent_spec(n);
    if (budget < 0) continue;
    std::vector<GroupSpec> complements;
    if (c.complement.kind == Kind::Exact) {
      complements = expand(catalog, c.complement.shape, p);
    } else {
      for (const auto& k : universe_specs(catalog, p, budget)) {
        if (c.complement.matches(k)) complements.push_back(k);
      }
    }
    for (const auto& k : complements) {
      if (order_exponent_spec(k) <= budget) out.emplace_back(n, k);
    }
  }
  canonical_sort(out);
  return out;
}

}  // namespace schurpair
