#pragma once

// Registry of the named non-abelian p-groups, and the group specs built from
// them: a spec is either abelian or (catalog base) x (abelian tail).
//
// Per-entry data (order, abelianization, multiplier) is not hard-coded: it is
// loaded from a fixtures file produced offline from each group's defining
// presentation. Loading refuses any entry whose multiplier order disagrees with
// the corank t of the classification theorem that lists the group.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurpair/abelian.hpp"

namespace schurpair {

enum class PrimeConstraint { Any, TwoOnly, Odd, ThreeOnly, OddNotThree };

bool admits(PrimeConstraint c, Prime p);
std::string_view to_string(PrimeConstraint c);
/// Inverse of to_string; throws InvalidFixture on an unknown spelling.
PrimeConstraint parse_prime_constraint(std::string_view text);

class MultiplierData {
 public:
  static MultiplierData full(AbelianPGroup structure);
  static MultiplierData order_only(int exponent);

  int exponent() const noexcept { return exponent_; }
  bool is_full() const noexcept { return structure_.has_value(); }
  const std::optional<AbelianPGroup>& structure() const noexcept { return structure_; }

  bool operator==(const MultiplierData&) const = default;

 private:
  MultiplierData(std::optional<AbelianPGroup> s, int e) : structure_(std::move(s)), exponent_(e) {}

  std::optional<AbelianPGroup> structure_;
  int exponent_ = 0;
};

/// A registered entry with whatever fixture data has been loaded.
struct CatalogEntry {
  std::string id;
  std::string display;
  PrimeConstraint constraint = PrimeConstraint::Any;
  std::string source;  // theorem item listing the group
  int source_t = 0;    // corank the listing theorem assigns

  bool has_fixture = false;
  std::optional<int> order_exp;
  std::optional<Partition> ab;
  std::optional<Partition> mult_structure;
  std::optional<int> mult_exp;
  std::string provenance;

  bool fixture_complete() const { return order_exp && ab && mult_exp; }
};

/// A catalog entry instantiated at a prime.
struct BaseGroup {
  std::string id;
  Prime p;
  int order_exp = 0;
  std::optional<AbelianPGroup> ab;
  std::optional<MultiplierData> mult;
};

class GroupSpec {
 public:
  static GroupSpec abelian(AbelianPGroup a);
  static GroupSpec product(BaseGroup base, AbelianPGroup tail);
  static GroupSpec trivial(Prime p) { return abelian(AbelianPGroup(p)); }

  bool is_abelian() const noexcept { return !base_.has_value(); }
  bool is_trivial() const noexcept { return is_abelian() && tail_.is_trivial(); }
  const std::optional<BaseGroup>& base() const noexcept { return base_; }
  const AbelianPGroup& tail() const noexcept { return tail_; }
  Prime prime() const noexcept { return tail_.prime(); }

  /// Structural equality: same base id (or none) and same tail.
  bool operator==(const GroupSpec& other) const;

 private:
  GroupSpec(std::optional<BaseGroup> base, AbelianPGroup tail)
      : base_(std::move(base)), tail_(std::move(tail)) {}

  std::optional<BaseGroup> base_;
  AbelianPGroup tail_;
};

/// Canonical text, e.g. "E1 x Z(p^2) x Z(p)^(3)"; the trivial group prints as "1".
std::string to_expr(const GroupSpec& s);

class Catalog {
 public:
  /// Registered entries without any fixture data.
  static Catalog registry_only();
  /// Parses and validates fixtures JSON text; throws InvalidFixture.
  static Catalog from_json_text(std::string_view text);
  static Catalog load(const std::filesystem::path& path);
  /// Path compiled in at build time (the repository's data/ directory).
  static std::filesystem::path default_fixtures_path();

  const CatalogEntry& entry(std::string_view id) const;
  bool contains(std::string_view id) const;
  std::vector<std::string> ids() const;

  /// Throws UnknownId, PrimeConstraintViolation, MissingFixture.
  BaseGroup lookup(std::string_view id, Prime p) const;

 private:
  std::map<std::string, CatalogEntry, std::less<>> entries_;
};

AbelianPGroup abelianization(const GroupSpec& s);
MultiplierData multiplier_of_spec(const GroupSpec& s);
int order_exponent_spec(const GroupSpec& s);
/// d(G) as the rank of G^ab (Burnside basis theorem).
int rank_spec(const GroupSpec& s);

}  // namespace schurpair
