#include <doctest.h>

#include "schurpair/verification.hpp"

using namespace schurpair;

namespace {

const Catalog& shipped() {
  static const Catalog c = Catalog::load(Catalog::default_fixtures_path());
  return c;
}

SweepConfig small() {
  SweepConfig cfg;
  cfg.max_group_exp = 6;
  cfg.max_total_exp = 5;
  cfg.trials = 50;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  SweepConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.primes.clear();
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = SweepConfig{};
  cfg.max_total_exp = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("abelian t sets") {
  CHECK(abelian_partitions_with_t(Prime(2), 8, 4) == std::vector<Partition>{{2, 2}, {2, 1, 1, 1}});
  CHECK(abelian_partitions_with_t(Prime(5), 8, 5) == std::vector<Partition>{{3, 1}, {2, 1, 1, 1, 1}});
  CHECK(abelian_partitions_with_t(Prime(3), 3, 0).size() == 4);
}

TEST_CASE("tensor by presentation") {
  const Prime p(3);
  CHECK(tensor_by_presentation(AbelianPGroup(p, {1}), AbelianPGroup(p, {1}), 7) == AbelianPGroup(p, {1}));
  for (std::uint64_t seed : {0u, 1u, 2u, 3u}) {
    CHECK(tensor_by_presentation(AbelianPGroup(p, {3, 2}), AbelianPGroup(p, {2, 1}), seed) ==
          AbelianPGroup(p, {2, 2, 1, 1}));
  }
  CHECK(tensor_by_presentation(AbelianPGroup(p), AbelianPGroup(p, {4}), 0).is_trivial());
}

TEST_CASE("sweeps pass on small bounds") {
  const SweepConfig cfg = small();
  for (const auto& r : {abelian_classification_sweep(cfg), tensor_snf_cross_check(cfg), additivity_sweep(shipped(), cfg),
                        elementary_abelian_identity_sweep(shipped(), cfg)}) {
    CHECK_MESSAGE(r.passed(), r.suite << ": " << (r.failures.empty() ? "" : r.failures.front().instance));
    CHECK(r.instances > 0);
    CHECK(r.excluded == 0);
  }
}

TEST_CASE("sweeps are deterministic and monotone") {
  SweepConfig cfg = small();
  const auto a = tensor_snf_cross_check(cfg);
  const auto b = tensor_snf_cross_check(cfg);
  CHECK(to_json(a).dump() == to_json(b).dump());
  const auto narrow = additivity_sweep(shipped(), cfg);
  cfg.max_total_exp = 6;
  const auto wide = additivity_sweep(shipped(), cfg);
  CHECK(wide.instances > narrow.instances);
}

TEST_CASE("t=4 soundness and completeness on small bounds") {
  SweepConfig cfg = small();
  const auto r = main_theorem_sweep(MainTheorem::TFour, shipped(), cfg);
  CHECK_MESSAGE(r.passed(), (r.failures.empty() ? "" : r.failures.front().instance));
}

TEST_CASE("overlap map reports the repeated t=5 case") {
  SweepConfig cfg = small();
  cfg.primes = {Prime(3)};
  const auto r = main_theorem_completeness(MainTheorem::TFive, shipped(), cfg);
  bool found = false;
  for (const auto& o : r.overlaps) found = found || o.find("2.2/27,2.2/28") != std::string::npos;
  CHECK(found);
}

TEST_CASE("report json") {
  SweepReport r;
  r.suite = "x";
  r.instances = 3;
  r.failures.push_back({"i", "e", "a"});
  r.elapsed_seconds = 1.5;
  const auto j = to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["failures"][0]["expected"] == "e");
  CHECK_FALSE(j.contains("elapsedSeconds"));
  CHECK(to_json(r, true)["elapsedSeconds"] == 1.5);
}
