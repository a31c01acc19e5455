#pragma once

// Exhaustive and seeded sweeps that check the library's claims against brute
// force within a bounded universe. Every sweep is deterministic for a given
// config; failures are collected, never thrown.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "schurpair/classifier.hpp"

namespace schurpair {

struct SweepConfig {
  std::vector<Prime> primes{Prime(2), Prime(3), Prime(5)};
  int max_group_exp = 8;
  int max_total_exp = 6;
  std::uint64_t seed = 0;
  int trials = 1000;
  int jobs = 1;

  /// Throws InvalidConfig for empty primes or non-positive bounds.
  void validate() const;
};

struct SweepFailure {
  std::string instance;
  std::string expected;
  std::string actual;
};

struct SweepReport {
  std::string suite;
  long instances = 0;
  std::vector<SweepFailure> failures;
  std::vector<std::string> notes;
  std::vector<std::string> overlaps;  // pairs matching more than one case
  long excluded = 0;                  // catalog bases skipped for missing fixture data
  double elapsed_seconds = 0;

  bool passed() const { return failures.empty(); }
};

/// Keys are emitted in a fixed order; timing only when requested.
nlohmann::ordered_json to_json(const SweepReport& r, bool include_timing = false);

/// t=0 iff elementary, t=4 iff [2,2] or [2,1,1,1], t=5 iff [3,1] or [2,1,1,1,1],
/// and every abelian group with t <= 5 lands in exactly one single-group family.
SweepReport abelian_classification_sweep(const SweepConfig& cfg);

/// Partitions of n <= max_n whose abelian group has corank t at p.
std::vector<Partition> abelian_partitions_with_t(Prime p, int max_n, int t);

/// Cokernel of the Kronecker presentation of A (x) B, with each factor's
/// diagonal relation matrix scrambled by seeded unimodular transforms.
AbelianPGroup tensor_by_presentation(const AbelianPGroup& a, const AbelianPGroup& b, std::uint64_t seed);

/// min-formula tensor against tensor_by_presentation: every pair of rank <= 3
/// and parts <= 3, then cfg.trials random pairs of rank <= 5 and parts <= 6.
SweepReport tensor_snf_cross_check(const SweepConfig& cfg);

/// t_single(N x K) = t_pair(N, K) + t_single(K) and t_pair >= 0 over every
/// universe pair with total exponent <= cfg.max_total_exp.
SweepReport additivity_sweep(const Catalog& catalog, const SweepConfig& cfg);

/// t_pair = rank(N) * (m - d(K)) for elementary abelian N of rank <= 5 and
/// universe K of exponent <= 5.
SweepReport elementary_abelian_identity_sweep(const Catalog& catalog, const SweepConfig& cfg);

/// Every instance of every case within cfg.max_total_exp has the theorem's t.
SweepReport main_theorem_soundness(MainTheorem th, const Catalog& catalog, const SweepConfig& cfg);

/// Every universe pair with the theorem's t matches some case; overlaps listed.
SweepReport main_theorem_completeness(MainTheorem th, const Catalog& catalog, const SweepConfig& cfg);

/// Soundness and completeness merged into one report.
SweepReport main_theorem_sweep(MainTheorem th, const Catalog& catalog, const SweepConfig& cfg);

}  // namespace schurpair
