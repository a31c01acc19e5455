#include "schurpair/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#ifndef SCHURPAIR_DEFAULT_FIXTURES
#define SCHURPAIR_DEFAULT_FIXTURES "data/catalog_fixtures.json"
#endif

namespace schurpair {

namespace {

constexpr std::string_view kSchema = "schurpair-fixtures/1";

struct Registration {
  const char* id;
  const char* display;
  PrimeConstraint constraint;
  const char* source;
  int t;
};

// clang-format off
constexpr Registration kRegistry[] = {
  {"D8", "D, dihedral group of order 8", PrimeConstraint::TwoOnly, "Thm 1.3(iii)", 2},
  {"Q8", "Q, quaternion group of order 8", PrimeConstraint::TwoOnly, "Thm 1.3(iv)", 3},
  {"E1", "E_1, extraspecial of order p^3 and exponent p", PrimeConstraint::Odd, "Thm 1.3(ii)", 1},
  {"E2", "E_2, extraspecial of order p^3 and exponent p^2", PrimeConstraint::Odd, "Thm 1.3(iv)", 3},
  {"E4", "E_4, central product of Z(p^2) and a non-abelian group of order p^3", PrimeConstraint::Odd, "Thm 1.6 item 5", 4},
  {"thm4_3", "<a,b | a^4=b^4=1, [a,b,a]=[a,b,b]=1, [a,b]=a^2b^2>", PrimeConstraint::TwoOnly, "Thm 1.6 item 3", 4},
  {"thm4_4", "<a,b,c | a^2=b^2=c^2=1, abc=bca=cab>", PrimeConstraint::TwoOnly, "Thm 1.6 item 4", 4},
  {"thm4_7", "Z(p)^(4) x|_theta Z(p)", PrimeConstraint::Odd, "Thm 1.6 item 7", 4},
  {"thm4_9", "<a,b | a^(p^2)=b^p=1, [a,b,a]=[a,b,b]=1>", PrimeConstraint::Odd, "Thm 1.6 item 9", 4},
  {"thm4_10", "<a,b | a^9=b^3=1, [a,b,a]=1, [a,b,b]=a^6, [a,b,b,b]=1>", PrimeConstraint::ThreeOnly, "Thm 1.6 item 10", 4},
  {"thm4_11", "<a,b | a^p=b^p=1, [a,b,a]=[a,b,b,a]=[a,b,b,b]=1>", PrimeConstraint::OddNotThree, "Thm 1.6 item 11", 4},
  {"ES_p5_expP", "extraspecial of order p^5 and exponent p", PrimeConstraint::Odd, "Thm 1.7 item 5", 5},
  {"ES_p5_expP2", "extraspecial of order p^5 and exponent p^2", PrimeConstraint::Odd, "Thm 1.7 item 5", 5},
  {"ES_2_5_plus", "extraspecial of order 32, D o D", PrimeConstraint::TwoOnly, "Thm 1.7 item 5", 5},
  {"ES_2_5_minus", "extraspecial of order 32, D o Q", PrimeConstraint::TwoOnly, "Thm 1.7 item 5", 5},
  {"thm5_6", "<a,b | a^(p^2)=b^(p^2)=1, [a,b,a]=[a,b,b]=1, [a,b]=a^p>", PrimeConstraint::Odd, "Thm 1.7 item 6", 5},
  {"thm5_7", "<a,b | a^(p^2)=b^p=1, [a,b,a]=[a,b,b]=a^p, [a,b,b,b]=1>", PrimeConstraint::Odd, "Thm 1.7 item 7", 5},
  {"thm5_8", "<a,b | a^(p^2)=b^p=1, [a,b,a]=[a,b,b,b]=1, [a,b,b]=a^(np)>, n a quadratic non-residue", PrimeConstraint::OddNotThree, "Thm 1.7 item 8", 5},
  {"thm5_9", "<a,b | a^(p^2)=1, b^3=a^3, [a,b,a]=[a,b,b,b]=1, [a,b,b]=a^6>", PrimeConstraint::ThreeOnly, "Thm 1.7 item 9", 5},
  {"thm5_10", "<a,b | a^p=1, b^p=[a,b,b], [a,b,a]=[a,b,b,b]=[a,b,b,a]=1>", PrimeConstraint::Odd, "Thm 1.7 item 10", 5},
  {"D16", "D_16, dihedral group of order 16", PrimeConstraint::TwoOnly, "Thm 1.7 item 11", 5},
  {"thm5_12", "<a,b | a^4=b^4=1, a^-1 b a=b^-1>", PrimeConstraint::TwoOnly, "Thm 1.7 item 12", 5},
  {"thm5_14", "(D x Z(2)) x| Z(2)", PrimeConstraint::TwoOnly, "Thm 1.7 item 14", 5},
  {"thm5_15", "(Q x Z(2)) x| Z(2)", PrimeConstraint::TwoOnly, "Thm 1.7 item 15", 5},
};
// clang-format on

[[noreturn]] void bad_fixture(std::string_view id, const std::string& why) {
  throw Error(ErrorKind::InvalidFixture, std::string(id) + ": " + why);
}

Partition read_partition(std::string_view id, const nlohmann::json& j, const char* field) {
  if (!j.is_array()) bad_fixture(id, std::string(field) + " must be an array");
  Partition parts;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<int>() <= 0) {
      bad_fixture(id, std::string(field) + " parts must be positive integers");
    }
    parts.push_back(v.get<int>());
  }
  try {
    return canonical_partition(std::move(parts));
  } catch (const Error& e) {
    bad_fixture(id, e.what());
  }
}

int partition_sum(const Partition& parts) {
  int s = 0;
  for (int e : parts) s += e;
  return s;
}

void load_entry(CatalogEntry& entry, const nlohmann::json& j) {
  const std::string_view id = entry.id;
  if (!j.is_object()) bad_fixture(id, "entry must be an object");

  if (!j.contains("p_constraint") || !j["p_constraint"].is_string()) {
    bad_fixture(id, "missing p_constraint");
  }
  if (parse_prime_constraint(j["p_constraint"].get<std::string>()) != entry.constraint) {
    bad_fixture(id, "p_constraint disagrees with the registry (" +
                        std::string(to_string(entry.constraint)) + ")");
  }

  if (j.contains("order_exp") && !j["order_exp"].is_null()) {
    if (!j["order_exp"].is_number_integer() || j["order_exp"].get<int>() < 0) {
      bad_fixture(id, "order_exp must be a nonnegative integer");
    }
    entry.order_exp = j["order_exp"].get<int>();
  }
  if (j.contains("ab") && !j["ab"].is_null()) entry.ab = read_partition(id, j["ab"], "ab");

  if (j.contains("mult") && !j["mult"].is_null()) {
    const auto& m = j["mult"];
    if (!m.is_object()) bad_fixture(id, "mult must be an object");
    if (m.contains("structure")) {
      entry.mult_structure = read_partition(id, m["structure"], "mult.structure");
      entry.mult_exp = partition_sum(*entry.mult_structure);
    }
    if (m.contains("order_exp")) {
      if (!m["order_exp"].is_number_integer() || m["order_exp"].get<int>() < 0) {
        bad_fixture(id, "mult.order_exp must be a nonnegative integer");
      }
      const int e = m["order_exp"].get<int>();
      if (entry.mult_exp && *entry.mult_exp != e) {
        bad_fixture(id, "mult.order_exp disagrees with mult.structure");
      }
      entry.mult_exp = e;
    }
    if (!entry.mult_exp) bad_fixture(id, "mult needs structure or order_exp");
  }
  if (j.contains("provenance") && j["provenance"].is_string()) {
    entry.provenance = j["provenance"].get<std::string>();
  }

  if (entry.ab && entry.order_exp && partition_sum(*entry.ab) >= *entry.order_exp) {
    bad_fixture(id, "abelianization must be a proper quotient of a non-abelian group");
  }
  if (entry.order_exp && entry.mult_exp) {
    const int n = *entry.order_exp;
    const int t = n * (n - 1) / 2 - *entry.mult_exp;
    if (t != entry.source_t) {
      bad_fixture(id, "multiplier order p^" + std::to_string(*entry.mult_exp) + " gives t=" +
                          std::to_string(t) + " but " + entry.source + " lists the group at t=" +
                          std::to_string(entry.source_t));
    }
  }
  entry.has_fixture = true;
}

}  // namespace

bool admits(PrimeConstraint c, Prime p) {
  const auto v = p.value();
  switch (c) {
    case PrimeConstraint::Any: return true;
    case PrimeConstraint::TwoOnly: return v == 2;
    case PrimeConstraint::Odd: return v != 2;
    case PrimeConstraint::ThreeOnly: return v == 3;
    case PrimeConstraint::OddNotThree: return v != 2 && v != 3;
  }
  return false;
}

std::string_view to_string(PrimeConstraint c) {
  switch (c) {
    case PrimeConstraint::Any: return "any";
    case PrimeConstraint::TwoOnly: return "p=2";
    case PrimeConstraint::Odd: return "odd";
    case PrimeConstraint::ThreeOnly: return "p=3";
    case PrimeConstraint::OddNotThree: return "odd,p!=3";
  }
  return "?";
}

PrimeConstraint parse_prime_constraint(std::string_view text) {
  for (auto c : {PrimeConstraint::Any, PrimeConstraint::TwoOnly, PrimeConstraint::Odd,
                 PrimeConstraint::ThreeOnly, PrimeConstraint::OddNotThree}) {
    if (to_string(c) == text) return c;
  }
  throw Error(ErrorKind::InvalidFixture, "unknown prime constraint '" + std::string(text) + "'");
}

MultiplierData MultiplierData::full(AbelianPGroup structure) {
  const int e = order_exponent(structure);
  return MultiplierData(std::move(structure), e);
}

MultiplierData MultiplierData::order_only(int exponent) {
  if (exponent < 0) throw Error(ErrorKind::InvalidArgument, "negative multiplier exponent");
  return MultiplierData(std::nullopt, exponent);
}

GroupSpec GroupSpec::abelian(AbelianPGroup a) { return GroupSpec(std::nullopt, std::move(a)); }

GroupSpec GroupSpec::product(BaseGroup base, AbelianPGroup tail) {
  if (base.p != tail.prime()) {
    throw Error(ErrorKind::PrimeMismatch, "base " + base.id + " and tail use different primes");
  }
  return GroupSpec(std::move(base), std::move(tail));
}

bool GroupSpec::operator==(const GroupSpec& other) const {
  if (prime() != other.prime() || tail_ != other.tail_) return false;
  if (base_.has_value() != other.base_.has_value()) return false;
  return !base_ || base_->id == other.base_->id;
}

std::string to_expr(const GroupSpec& s) {
  std::vector<std::string> factors;
  if (s.base()) factors.push_back(s.base()->id);
  const auto& e = s.tail().exps();
  for (std::size_t i = 0; i < e.size();) {
    std::size_t j = i;
    while (j < e.size() && e[j] == e[i]) ++j;
    std::string atom = e[i] == 1 ? "Z(p)" : "Z(p^" + std::to_string(e[i]) + ")";
    if (j - i > 1) atom += "^(" + std::to_string(j - i) + ")";
    factors.push_back(std::move(atom));
    i = j;
  }
  if (factors.empty()) return "1";
  std::string out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out += " x " + factors[i];
  return out;
}

Catalog Catalog::registry_only() {
  Catalog c;
  for (const auto& r : kRegistry) {
    CatalogEntry e;
    e.id = r.id;
    e.display = r.display;
    e.constraint = r.constraint;
    e.source = r.source;
    e.source_t = r.t;
    c.entries_.emplace(e.id, std::move(e));
  }
  return c;
}

Catalog Catalog::from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidFixture, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("schema", std::string()) != kSchema) {
    throw Error(ErrorKind::InvalidFixture, "expected schema '" + std::string(kSchema) + "'");
  }
  if (!doc.contains("entries") || !doc["entries"].is_object()) {
    throw Error(ErrorKind::InvalidFixture, "missing 'entries' object");
  }
  Catalog c = registry_only();
  for (const auto& [id, value] : doc["entries"].items()) {
    auto it = c.entries_.find(id);
    if (it == c.entries_.end()) bad_fixture(id, "not a registered catalog id");
    load_entry(it->second, value);
  }
  return c;
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MissingFixture, "cannot open fixtures file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::filesystem::path Catalog::default_fixtures_path() { return SCHURPAIR_DEFAULT_FIXTURES; }

const CatalogEntry& Catalog::entry(std::string_view id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw Error(ErrorKind::UnknownId, "no catalog entry '" + std::string(id) + "'");
  return it->second;
}

bool Catalog::contains(std::string_view id) const { return entries_.find(id) != entries_.end(); }

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [id, e] : entries_) out.push_back(id);
  return out;
}

BaseGroup Catalog::lookup(std::string_view id, Prime p) const {
  const CatalogEntry& e = entry(id);
  if (!admits(e.constraint, p)) {
    throw Error(ErrorKind::PrimeConstraintViolation,
                e.id + " requires " + std::string(to_string(e.constraint)) + ", got p=" +
                    std::to_string(p.value()));
  }
  if (!e.has_fixture || !e.order_exp) {
    throw Error(ErrorKind::MissingFixture, e.id + " has no fixture data loaded");
  }
  BaseGroup b{e.id, p, *e.order_exp, std::nullopt, std::nullopt};
  if (e.ab) b.ab = AbelianPGroup(p, *e.ab);
  if (e.mult_structure) {
    b.mult = MultiplierData::full(AbelianPGroup(p, *e.mult_structure));
  } else if (e.mult_exp) {
    b.mult = MultiplierData::order_only(*e.mult_exp);
  }
  return b;
}

AbelianPGroup abelianization(const GroupSpec& s) {
  if (s.is_abelian()) return s.tail();
  const auto& base = *s.base();
  if (!base.ab) throw Error(ErrorKind::UnknownAbelianization, base.id);
  return direct_product(*base.ab, s.tail());
}

// Schur: M(A x B) = M(A) x M(B) x (A^ab (x) B^ab).
MultiplierData multiplier_of_spec(const GroupSpec& s) {
  if (s.is_abelian()) return MultiplierData::full(multiplier_abelian(s.tail()));
  const auto& base = *s.base();
  if (!base.mult) throw Error(ErrorKind::UnknownMultiplier, base.id);
  const AbelianPGroup tail_mult = multiplier_abelian(s.tail());
  AbelianPGroup cross(s.prime());
  if (!s.tail().is_trivial()) {
    if (!base.ab) throw Error(ErrorKind::UnknownAbelianization, base.id);
    cross = tensor(*base.ab, s.tail());
  }
  if (base.mult->is_full()) {
    return MultiplierData::full(direct_product(direct_product(*base.mult->structure(), tail_mult), cross));
  }
  return MultiplierData::order_only(base.mult->exponent() + order_exponent(tail_mult) +
                                    order_exponent(cross));
}

int order_exponent_spec(const GroupSpec& s) {
  return (s.base() ? s.base()->order_exp : 0) + order_exponent(s.tail());
}

int rank_spec(const GroupSpec& s) { return rank(abelianization(s)); }

}  // namespace schurpair
