#pragma once

// Executable forms of the single-group classifications for t <= 5 and of the
// two pair classifications (t = 4 with 27 cases, t = 5 with 42 cases).
//
// Matching is structural over the implemented universe: a spec matches a shape
// when it has the same catalog base (or none) and the same abelian tail. "K is
// any group with d(K) = m - c" ranges over universe specs only.

#include <string>
#include <vector>

#include "schurpair/catalog.hpp"
#include "schurpair/pair.hpp"

namespace schurpair {

inline constexpr int kDefaultEnumerationCap = 8;

struct Shape {
  std::vector<std::string> bases;  // any of these catalog ids; empty means abelian
  Partition tail;
  bool any_elementary = false;     // abelian with all parts 1, any rank

  bool matches(const GroupSpec& s) const;
  std::string describe() const;
};

struct ComplementPattern {
  enum class Kind { Exact, RankDeficit };
  Kind kind = Kind::Exact;
  Shape shape;      // Exact
  int deficit = 0;  // RankDeficit: d(K) = m - deficit

  bool matches(const GroupSpec& k) const;
  std::string describe() const;
};

enum class MainTheorem { TFour, TFive };

int target_t(MainTheorem th);
std::string_view label(MainTheorem th);  // "2.1" / "2.2"

struct FamilyCase {
  MainTheorem theorem;
  int case_no;
  Shape normal;
  ComplementPattern complement;
  PrimeConstraint constraint;

  bool matches(const PairSpec& pair) const;
  std::string describe() const;
};

const std::vector<FamilyCase>& main_theorem_cases(MainTheorem th);
/// Throws UnknownId for a case number outside the theorem's list.
const FamilyCase& main_theorem_case(MainTheorem th, int case_no);

struct SingleFamily {
  std::string theorem;  // e.g. "1.6"
  std::string item;     // e.g. "2" or "iv"; empty when the theorem is unnumbered
  int t;
  Shape shape;

  std::string label() const;  // e.g. "Thm 1.6 item 2"
};

const std::vector<SingleFamily>& single_group_families();

struct SingleClassification {
  int t = 0;
  std::vector<const SingleFamily*> families;
};

SingleClassification classify_single_group(const GroupSpec& s);

struct CaseRef {
  MainTheorem theorem;
  int case_no;

  bool operator==(const CaseRef&) const = default;
  std::string label() const;  // e.g. "2.1/18"
};

struct ClassificationResult {
  PairReport report;
  int t = 0;
  std::vector<CaseRef> matches;
  bool universe_caveat = false;
  std::vector<std::string> notes;
};

ClassificationResult classify_pair(const PairSpec& pair);

struct UniverseStats {
  int specs = 0;
  int excluded_bases = 0;  // admissible bases skipped for missing fixture fields
};

/// Every spec of order exponent <= max_exp at p: abelian, or a fixture-complete
/// admissible base times an abelian tail. Sorted by (order exponent, text).
std::vector<GroupSpec> universe_specs(const Catalog& catalog, Prime p, int max_exp,
                                      UniverseStats* stats = nullptr);

/// Canonical pair text "N=<expr>;K=<expr>" used for ordering and output.
std::string encode(const PairSpec& pair);

/// Sorts by total exponent, then encoding; removes duplicates.
void canonical_sort(std::vector<PairSpec>& pairs);

struct EnumeratedPair {
  PairSpec pair;
  ClassificationResult result;
};

/// All universe pairs with order_exp(N) + order_exp(K) <= max_total_exp whose t
/// equals t_target, canonically sorted. Throws CapExceeded above cap.
std::vector<EnumeratedPair> enumerate_pairs(const Catalog& catalog, int t_target, Prime p,
                                            int max_total_exp, int jobs = 1,
                                            int cap = kDefaultEnumerationCap);

/// Universe instances of a case within the exponent budget.
/// Throws PrimeConstraintViolation and MissingFixture.
std::vector<PairSpec> instantiate_case(const Catalog& catalog, const FamilyCase& c, Prime p,
                                       int max_total_exp);

}  // namespace schurpair
