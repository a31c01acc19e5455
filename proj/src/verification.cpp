#include "schurpair/verification.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "schurpair/partitions.hpp"

namespace schurpair {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string at_p(Prime p, const std::string& what) { return "p=" + std::to_string(p.value()) + " " + what; }

std::string t_text(int t) { return "t=" + std::to_string(t); }

/// Applies a handful of random elementary row and column operations.
void scramble(IntMatrix& m, std::mt19937_64& rng) {
  const std::size_t n = m.rows();
  if (n < 2) return;
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  std::uniform_int_distribution<int> factor(-2, 2);
  for (std::size_t step = 0; step < 2 * n; ++step) {
    std::size_t a = index(rng), b = index(rng);
    if (a == b) continue;
    const mpz_class c = factor(rng);
    if (step % 2 == 0) {
      m.add_row_multiple(a, b, c);
    } else {
      m.add_col_multiple(a, b, c);
    }
  }
  m.swap_rows(index(rng), index(rng));
  m.swap_cols(index(rng), index(rng));
}

IntMatrix relation_matrix(const AbelianPGroup& g) {
  std::vector<long> diag;
  long p = static_cast<long>(g.prime().value());
  for (int e : g.exps()) {
    long v = 1;
    for (int i = 0; i < e; ++i) v *= p;
    diag.push_back(v);
  }
  return IntMatrix::diagonal(diag);
}

Partition random_partition(std::mt19937_64& rng, int max_rank, int max_part) {
  std::uniform_int_distribution<int> rank(0, max_rank);
  std::uniform_int_distribution<int> part(1, max_part);
  Partition out(static_cast<std::size_t>(rank(rng)));
  for (auto& x : out) x = part(rng);
  return canonical_partition(out);
}

/// Partitions with at most max_rank parts, each at most max_part.
std::vector<Partition> bounded_partitions(int max_rank, int max_part) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_rank * max_part; ++n) {
    for (auto& part : partitions_of(n)) {
      if (static_cast<int>(part.size()) <= max_rank && (part.empty() || part.front() <= max_part)) {
        out.push_back(std::move(part));
      }
    }
  }
  return out;
}

void check_tensor(SweepReport& r, const AbelianPGroup& a, const AbelianPGroup& b, std::uint64_t seed) {
  ++r.instances;
  const std::string instance = at_p(a.prime(), partition_to_string(a.exps()) + " (x) " + partition_to_string(b.exps()));
  try {
    const AbelianPGroup expected = tensor(a, b);
    const AbelianPGroup actual = tensor_by_presentation(a, b, seed);
    if (!(expected == actual)) {
      r.failures.push_back({instance, partition_to_string(expected.exps()), partition_to_string(actual.exps())});
    }
  } catch (const Error& e) {
    r.failures.push_back({instance, "a finite p-group", e.what()});
  }
}

}  // namespace

void SweepConfig::validate() const {
  if (primes.empty()) throw Error(ErrorKind::InvalidConfig, "no primes given");
  if (max_group_exp <= 0 || max_total_exp <= 0) throw Error(ErrorKind::InvalidConfig, "bounds must be positive");
  if (trials < 0) throw Error(ErrorKind::InvalidConfig, "trials must be non-negative");
  if (jobs <= 0) throw Error(ErrorKind::InvalidConfig, "jobs must be positive");
}

nlohmann::ordered_json to_json(const SweepReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["instances"] = r.instances;
  j["excluded"] = r.excluded;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    j["failures"].push_back({{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
  }
  j["overlaps"] = r.overlaps;
  j["notes"] = r.notes;
  if (include_timing) j["elapsedSeconds"] = r.elapsed_seconds;
  return j;
}

std::vector<Partition> abelian_partitions_with_t(Prime p, int max_n, int t) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_n; ++n) {
    for (auto& part : partitions_of(n)) {
      if (t_single(GroupSpec::abelian(AbelianPGroup(p, part))) == t) out.push_back(std::move(part));
    }
  }
  return out;
}

SweepReport abelian_classification_sweep(const SweepConfig& cfg) {
  Stopwatch clock;
  SweepReport r;
  r.suite = "abelian";
  const std::set<Partition> t4 = {{2, 2}, {2, 1, 1, 1}};
  const std::set<Partition> t5 = {{3, 1}, {2, 1, 1, 1, 1}};
  for (Prime p : cfg.primes) {
    for (int n = 0; n <= cfg.max_group_exp; ++n) {
      for (const auto& part : partitions_of(n)) {
        ++r.instances;
        const GroupSpec s = GroupSpec::abelian(AbelianPGroup(p, part));
        const std::string instance = at_p(p, to_expr(s));
        const SingleClassification c = classify_single_group(s);
        const bool elementary = s.tail().is_elementary();
        if ((c.t == 0) != elementary) {
          r.failures.push_back({instance, elementary ? "t=0" : "t>0", t_text(c.t)});
        }
        if ((c.t == 4) != t4.contains(part)) {
          r.failures.push_back({instance, t4.contains(part) ? "t=4" : "t!=4", t_text(c.t)});
        }
        if ((c.t == 5) != t5.contains(part)) {
          r.failures.push_back({instance, t5.contains(part) ? "t=5" : "t!=5", t_text(c.t)});
        }
        if (c.t <= 5 && c.families.size() != 1) {
          r.failures.push_back({instance, "exactly one family", std::to_string(c.families.size()) + " families"});
        }
      }
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

AbelianPGroup tensor_by_presentation(const AbelianPGroup& a, const AbelianPGroup& b, std::uint64_t seed) {
  if (a.prime() != b.prime()) throw Error(ErrorKind::PrimeMismatch, "tensor of groups at different primes");
  std::mt19937_64 rng(seed);
  IntMatrix ra = relation_matrix(a);
  IntMatrix rb = relation_matrix(b);
  scramble(ra, rng);
  scramble(rb, rng);
  const std::size_t r = ra.rows(), s = rb.rows();
  // Generators x_i (x) y_j in position i*s + j; relations R_A (x) I_s, then I_r (x) R_B.
  IntMatrix m(2 * r * s, r * s);
  for (std::size_t row = 0; row < r; ++row) {
    for (std::size_t col = 0; col < r; ++col) {
      for (std::size_t j = 0; j < s; ++j) m(row * s + j, col * s + j) = ra(row, col);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t row = 0; row < s; ++row) {
      for (std::size_t col = 0; col < s; ++col) m(r * s + i * s + row, i * s + col) = rb(row, col);
    }
  }
  return from_relation_matrix(m, a.prime());
}

SweepReport tensor_snf_cross_check(const SweepConfig& cfg) {
  Stopwatch clock;
  SweepReport r;
  r.suite = "tensor-oracle";
  std::mt19937_64 rng(cfg.seed);
  const auto small = bounded_partitions(3, 3);
  for (Prime p : cfg.primes) {
    for (const auto& x : small) {
      for (const auto& y : small) check_tensor(r, AbelianPGroup(p, x), AbelianPGroup(p, y), rng());
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, cfg.primes.size() - 1);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Prime p = cfg.primes[pick(rng)];
    const Partition x = random_partition(rng, 5, 6);
    const Partition y = random_partition(rng, 5, 6);
    check_tensor(r, AbelianPGroup(p, x), AbelianPGroup(p, y), rng());
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

SweepReport additivity_sweep(const Catalog& catalog, const SweepConfig& cfg) {
  Stopwatch clock;
  SweepReport r;
  r.suite = "additivity";
  long two_bases = 0;
  for (Prime p : cfg.primes) {
    UniverseStats stats;
    const auto universe = universe_specs(catalog, p, cfg.max_total_exp, &stats);
    r.excluded += stats.excluded_bases;
    for (const auto& n : universe) {
      const int budget = cfg.max_total_exp - order_exponent_spec(n);
      for (const auto& k : universe) {
        if (order_exponent_spec(k) > budget) break;
        if (n.base() && k.base()) {
          ++two_bases;
          continue;
        }
        ++r.instances;
        const PairSpec pair(n, k);
        const std::string instance = at_p(p, encode(pair));
        try {
          const int tp = pair_multiplier_order(pair).t;
          const int tk = t_single(k);
          const int tg = t_single(fold_product(n, k));
          if (tg != tp + tk) {
            r.failures.push_back({instance, "t(NxK)=" + std::to_string(tp + tk), "t(NxK)=" + std::to_string(tg)});
          }
        } catch (const Error& e) {
          r.failures.push_back({instance, "computable pair with t>=0", e.what()});
        }
      }
    }
  }
  r.notes.push_back("pairs skipped because both N and K carry a catalog base: " + std::to_string(two_bases));
  r.elapsed_seconds = clock.seconds();
  return r;
}

SweepReport elementary_abelian_identity_sweep(const Catalog& catalog, const SweepConfig& cfg) {
  Stopwatch clock;
  SweepReport r;
  r.suite = "identity";
  for (Prime p : cfg.primes) {
    UniverseStats stats;
    const auto universe = universe_specs(catalog, p, 5, &stats);
    r.excluded += stats.excluded_bases;
    for (int rank = 1; rank <= 5; ++rank) {
      const GroupSpec n = GroupSpec::abelian(AbelianPGroup::elementary(p, rank));
      for (const auto& k : universe) {
        ++r.instances;
        const PairSpec pair(n, k);
        const std::string instance = at_p(p, encode(pair));
        try {
          const int expected = rank * (order_exponent_spec(k) - rank_spec(k));
          const int actual = pair_multiplier_order(pair).t;
          if (expected != actual) r.failures.push_back({instance, t_text(expected), t_text(actual)});
        } catch (const Error& e) {
          r.failures.push_back({instance, "computable pair", e.what()});
        }
      }
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

SweepReport main_theorem_soundness(MainTheorem th, const Catalog& catalog, const SweepConfig& cfg) {
  Stopwatch clock;
  SweepReport r;
  r.suite = "main-theorem " + std::string(label(th)) + " soundness";
  const int target = target_t(th);
  for (const auto& c : main_theorem_cases(th)) {
    const std::string case_label = std::string(label(th)) + "/" + std::to_string(c.case_no);
    long case_instances = 0;
    for (Prime p : cfg.primes) {
      if (!admits(c.constraint, p)) continue;
      std::vector<PairSpec> pairs;
      try {
        pairs = instantiate_case(catalog, c, p, cfg.max_total_exp);
      } catch (const Error& e) {
        r.failures.push_back({at_p(p, case_label), "instantiable case", e.what()});
        continue;
      }
      for (const auto& pair : pairs) {
        ++r.instances;
        ++case_instances;
        const std::string instance = at_p(p, case_label + " " + encode(pair));
        try {
          const int t = pair_multiplier_order(pair).t;
          if (t != target) r.failures.push_back({instance, t_text(target), t_text(t)});
        } catch (const Error& e) {
          r.failures.push_back({instance, t_text(target), e.what()});
        }
      }
    }
    if (case_instances == 0) r.notes.push_back(case_label + " has no instance within the exponent budget");
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

SweepReport main_theorem_completeness(MainTheorem th, const Catalog& catalog, const SweepConfig& cfg) {
  Stopwatch clock;
  SweepReport r;
  r.suite = "main-theorem " + std::string(label(th)) + " completeness";
  for (Prime p : cfg.primes) {
    UniverseStats stats;
    universe_specs(catalog, p, cfg.max_total_exp, &stats);
    r.excluded += stats.excluded_bases;
    const auto found = enumerate_pairs(catalog, target_t(th), p, cfg.max_total_exp, cfg.jobs);
    for (const auto& e : found) {
      ++r.instances;
      const std::string instance = at_p(p, encode(e.pair));
      if (e.result.matches.empty()) {
        r.failures.push_back({instance, "a matching case of " + std::string(label(th)), "no match"});
      } else if (e.result.matches.size() > 1) {
        std::string cases;
        for (const auto& m : e.result.matches) cases += (cases.empty() ? "" : ",") + m.label();
        r.overlaps.push_back(instance + " -> " + cases);
      }
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

SweepReport main_theorem_sweep(MainTheorem th, const Catalog& catalog, const SweepConfig& cfg) {
  SweepReport sound = main_theorem_soundness(th, catalog, cfg);
  SweepReport complete = main_theorem_completeness(th, catalog, cfg);
  SweepReport r;
  r.suite = "main-theorem " + std::string(label(th));
  r.instances = sound.instances + complete.instances;
  r.excluded = complete.excluded;
  r.failures = std::move(sound.failures);
  r.failures.insert(r.failures.end(), complete.failures.begin(), complete.failures.end());
  r.notes = std::move(sound.notes);
  r.notes.insert(r.notes.end(), complete.notes.begin(), complete.notes.end());
  r.overlaps = std::move(complete.overlaps);
  r.elapsed_seconds = sound.elapsed_seconds + complete.elapsed_seconds;
  return r;
}

}  // namespace schurpair
