#include "schurpair/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "schurpair/classifier.hpp"
#include "schurpair/expr.hpp"
#include "schurpair/verification.hpp"

namespace schurpair::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "table";
  std::string fixtures;
  std::string config;
  int jobs = 0;

  std::uint64_t p = 0;
  std::string expr;
  std::string n_expr;
  std::string k_expr = "1";
  int t = 0;
  int max_total = 0;
  int max_group = 0;
  int cap = kDefaultEnumerationCap;
  std::string suite = "all";
  std::vector<std::uint64_t> primes;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  bool timing = false;
  std::string catalog_id;
};

/// Values from --config; command-line flags take precedence.
struct ConfigFile {
  std::optional<std::string> fixtures;
  std::optional<std::vector<std::uint64_t>> primes;
  std::optional<int> max_group_exp;
  std::optional<int> max_total_exp;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> jobs;
};

ConfigFile read_config(const std::string& path) {
  ConfigFile c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidConfig, "cannot open config file " + path);
  try {
    const auto j = nlohmann::json::parse(in);
    if (!j.is_object()) throw Error(ErrorKind::InvalidConfig, "config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "fixtures") {
        c.fixtures = value.get<std::string>();
      } else if (key == "primes") {
        c.primes = value.get<std::vector<std::uint64_t>>();
      } else if (key == "max_group_exp") {
        c.max_group_exp = value.get<int>();
      } else if (key == "max_total_exp") {
        c.max_total_exp = value.get<int>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "trials") {
        c.trials = value.get<int>();
      } else if (key == "jobs") {
        c.jobs = value.get<int>();
      } else {
        throw Error(ErrorKind::InvalidConfig, "unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, path + ": " + e.what());
  }
  return c;
}

Catalog load_catalog(const Options& o, const ConfigFile& c) {
  std::string path = o.fixtures;
  if (path.empty() && c.fixtures) path = *c.fixtures;
  if (path.empty()) {
    if (const char* env = std::getenv("SCHURPAIR_FIXTURES"); env && *env) path = env;
  }
  if (path.empty()) path = Catalog::default_fixtures_path().string();
  return Catalog::load(path);
}

Json partition_json(const std::optional<AbelianPGroup>& g) {
  if (!g) return nullptr;
  return g->exps();
}

std::string structure_text(const MultiplierData& m) {
  return m.is_full() ? partition_to_string(m.structure()->exps()) : "order only";
}

std::string join(const std::vector<std::string>& items, const std::string& sep, const std::string& empty = "-") {
  if (items.empty()) return empty;
  std::string out = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) out += sep + items[i];
  return out;
}

void print_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << '\n';
}

std::vector<std::string> match_labels(const ClassificationResult& r) {
  std::vector<std::string> out;
  for (const auto& m : r.matches) out.push_back(m.label());
  return out;
}

Json pair_json(Prime p, const PairSpec& pair, const ClassificationResult& r) {
  Json j;
  j["p"] = p.value();
  j["N"] = to_expr(pair.normal());
  j["K"] = to_expr(pair.complement());
  j["n"] = r.report.n;
  j["m"] = r.report.m;
  j["boundExp"] = r.report.bound_exp;
  j["multExp"] = r.report.pair_mult_exp;
  j["t"] = r.t;
  j["structure"] = partition_json(r.report.structure.structure());
  j["matches"] = match_labels(r);
  j["caveats"] = r.notes;
  return j;
}

int cmd_group(const Options& o, const Catalog& catalog, std::ostream& out) {
  const Prime p(o.p);
  const GroupSpec s = parse_group_expr(o.expr, p, catalog);
  const SingleClassification c = classify_single_group(s);
  const MultiplierData mult = multiplier_of_spec(s);
  std::vector<std::string> families;
  for (const auto* f : c.families) families.push_back(f->label());
  std::vector<std::string> caveats;
  if (c.t > 5) caveats.push_back("single-group classification covers t<=5 only");
  if (o.format == "json") {
    Json j;
    j["p"] = p.value();
    j["expr"] = to_expr(s);
    j["n"] = order_exponent_spec(s);
    j["multExp"] = mult.exponent();
    j["t"] = c.t;
    j["structure"] = partition_json(mult.structure());
    j["families"] = families;
    j["caveats"] = caveats;
    out << j.dump(2) << '\n';
  } else {
    print_table(out, {{"group", to_expr(s)},
                      {"p", std::to_string(p.value())},
                      {"n", std::to_string(order_exponent_spec(s))},
                      {"multExp", std::to_string(mult.exponent())},
                      {"t", std::to_string(c.t)},
                      {"structure", structure_text(mult)},
                      {"families", join(families, ", ")},
                      {"caveats", join(caveats, "; ")}});
  }
  return kOk;
}

int cmd_pair(const Options& o, const Catalog& catalog, std::ostream& out) {
  const Prime p(o.p);
  const PairSpec pair(parse_group_expr(o.n_expr, p, catalog), parse_group_expr(o.k_expr, p, catalog));
  const ClassificationResult r = classify_pair(pair);
  if (o.format == "json") {
    out << pair_json(p, pair, r).dump(2) << '\n';
  } else {
    print_table(out, {{"N", to_expr(pair.normal())},
                      {"K", to_expr(pair.complement())},
                      {"p", std::to_string(p.value())},
                      {"n", std::to_string(r.report.n)},
                      {"m", std::to_string(r.report.m)},
                      {"boundExp", std::to_string(r.report.bound_exp)},
                      {"multExp", std::to_string(r.report.pair_mult_exp)},
                      {"t", std::to_string(r.t)},
                      {"structure", structure_text(r.report.structure)},
                      {"matches", join(match_labels(r), ", ")},
                      {"caveats", join(r.notes, "; ")}});
  }
  return kOk;
}

int cmd_enumerate(const Options& o, const Catalog& catalog, int jobs, std::ostream& out) {
  const Prime p(o.p);
  const auto found = enumerate_pairs(catalog, o.t, p, o.max_total, jobs, o.cap);
  if (o.format == "json") {
    Json j;
    j["p"] = p.value();
    j["t"] = o.t;
    j["maxTotal"] = o.max_total;
    j["count"] = found.size();
    j["pairs"] = Json::array();
    for (const auto& e : found) j["pairs"].push_back(pair_json(p, e.pair, e.result));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& e : found) {
      out << encode(e.pair) << "  t=" << e.result.t << "  matches=" << join(match_labels(e.result), ",") << '\n';
    }
    out << found.size() << " pairs with t=" << o.t << " at p=" << p.value() << ", total exponent <= " << o.max_total
        << '\n';
  }
  return kOk;
}

std::vector<Prime> to_primes(const std::vector<std::uint64_t>& values) {
  std::vector<Prime> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

std::vector<SweepReport> run_suites(const std::string& suite, const Catalog& catalog, const SweepConfig& cfg) {
  std::vector<SweepReport> reports;
  const bool all = suite == "all";
  if (all || suite == "abelian") reports.push_back(abelian_classification_sweep(cfg));
  if (all || suite == "tensor-oracle") reports.push_back(tensor_snf_cross_check(cfg));
  if (all || suite == "additivity") reports.push_back(additivity_sweep(catalog, cfg));
  if (all || suite == "identity") reports.push_back(elementary_abelian_identity_sweep(catalog, cfg));
  if (all || suite == "main-theorems") {
    reports.push_back(main_theorem_sweep(MainTheorem::TFour, catalog, cfg));
    reports.push_back(main_theorem_sweep(MainTheorem::TFive, catalog, cfg));
  }
  return reports;
}

int cmd_verify(const Options& o, const ConfigFile& c, const Catalog& catalog, int jobs, std::ostream& out) {
  SweepConfig cfg;
  if (c.primes) cfg.primes = to_primes(*c.primes);
  if (!o.primes.empty()) cfg.primes = to_primes(o.primes);
  if (c.max_group_exp) cfg.max_group_exp = *c.max_group_exp;
  if (o.max_group > 0) cfg.max_group_exp = o.max_group;
  if (c.max_total_exp) cfg.max_total_exp = *c.max_total_exp;
  if (o.max_total > 0) cfg.max_total_exp = o.max_total;
  if (c.seed) cfg.seed = *c.seed;
  if (o.seed) cfg.seed = *o.seed;
  if (c.trials) cfg.trials = *c.trials;
  if (o.trials) cfg.trials = *o.trials;
  cfg.jobs = jobs;
  cfg.validate();
  if (cfg.max_total_exp > kDefaultEnumerationCap) {
    throw Error(ErrorKind::CapExceeded, "max total exponent " + std::to_string(cfg.max_total_exp) + " exceeds cap " +
                                            std::to_string(kDefaultEnumerationCap));
  }

  const auto reports = run_suites(o.suite, catalog, cfg);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& r : reports) j.push_back(to_json(r, o.timing));
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "  instances=" << r.instances
          << "  failures=" << r.failures.size() << "  excluded=" << r.excluded;
      if (o.timing) out << "  elapsed=" << std::fixed << std::setprecision(3) << r.elapsed_seconds << "s";
      out << '\n';
      for (const auto& f : r.failures) {
        out << "  FAIL " << f.instance << ": expected " << f.expected << ", got " << f.actual << '\n';
      }
      for (const auto& ov : r.overlaps) out << "  overlap " << ov << '\n';
      for (const auto& n : r.notes) out << "  note " << n << '\n';
    }
  }
  return ok ? kOk : kVerificationFailed;
}

Json entry_json(const CatalogEntry& e) {
  Json j;
  j["id"] = e.id;
  j["name"] = e.display;
  j["primes"] = std::string(to_string(e.constraint));
  j["source"] = e.source;
  j["t"] = e.source_t;
  j["orderExp"] = e.order_exp ? Json(*e.order_exp) : Json(nullptr);
  j["ab"] = e.ab ? Json(*e.ab) : Json(nullptr);
  j["multExp"] = e.mult_exp ? Json(*e.mult_exp) : Json(nullptr);
  j["multStructure"] = e.mult_structure ? Json(*e.mult_structure) : Json(nullptr);
  j["provenance"] = e.provenance;
  return j;
}

std::string opt_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "?"; }
std::string opt_text(const std::optional<Partition>& v) { return v ? partition_to_string(*v) : "?"; }

int cmd_catalog_list(const Options& o, const Catalog& catalog, std::ostream& out) {
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& id : catalog.ids()) j.push_back(entry_json(catalog.entry(id)));
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << std::left << std::setw(14) << "id" << std::setw(10) << "primes" << std::setw(16) << "source"
      << std::setw(4) << "t" << std::setw(7) << "order" << std::setw(12) << "ab"
      << "mult" << '\n';
  for (const auto& id : catalog.ids()) {
    const auto& e = catalog.entry(id);
    const std::string mult = e.mult_structure ? partition_to_string(*e.mult_structure) : "p^" + opt_text(e.mult_exp);
    out << std::left << std::setw(14) << e.id << std::setw(10) << to_string(e.constraint) << std::setw(16)
        << e.source << std::setw(4) << e.source_t << std::setw(7) << ("p^" + opt_text(e.order_exp)) << std::setw(12)
        << opt_text(e.ab) << mult << '\n';
  }
  return kOk;
}

int cmd_catalog_show(const Options& o, const Catalog& catalog, std::ostream& out) {
  const auto& e = catalog.entry(o.catalog_id);
  if (o.format == "json") {
    out << entry_json(e).dump(2) << '\n';
    return kOk;
  }
  print_table(out, {{"id", e.id},
                    {"name", e.display},
                    {"primes", std::string(to_string(e.constraint))},
                    {"source", e.source},
                    {"t", std::to_string(e.source_t)},
                    {"orderExp", opt_text(e.order_exp)},
                    {"ab", opt_text(e.ab)},
                    {"multExp", opt_text(e.mult_exp)},
                    {"multStructure", opt_text(e.mult_structure)},
                    {"provenance", e.provenance.empty() ? "-" : e.provenance}});
  return kOk;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded:
    case ErrorKind::ExponentCapExceeded:
      return kCapExceeded;
    case ErrorKind::SyntaxError:
    case ErrorKind::InvalidPrime:
    case ErrorKind::InvalidConfig:
    case ErrorKind::InvalidArgument:
      return kUsage;
    default:
      return kDomain;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Schur multipliers of p-groups and of pairs (G,N) with G = N x K", "schurpair"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--fixtures", o.fixtures, "Catalog fixtures JSON (overrides config and SCHURPAIR_FIXTURES)");
  app.add_option("--config", o.config, "JSON config: fixtures, primes, max_group_exp, max_total_exp, seed, trials, jobs");
  app.add_option("--jobs", o.jobs, "Worker threads for enumerate and verify")->check(CLI::PositiveNumber);

  auto* group = app.add_subcommand("group", "Multiplier, corank t and matching family of one group");
  group->add_option("--p", o.p, "Prime")->required();
  group->add_option("--expr", o.expr, "Group expression, e.g. \"E1 x Z(p)^(2)\"")->required();

  auto* pair = app.add_subcommand("pair", "Pair multiplier and case matches for G = N x K");
  auto* classify = app.add_subcommand("classify", "Same report as pair");
  for (auto* sub : {pair, classify}) {
    sub->add_option("--p", o.p, "Prime")->required();
    sub->add_option("--N", o.n_expr, "Normal subgroup N")->required();
    sub->add_option("--K", o.k_expr, "Complement K (default 1)");
  }

  auto* enumerate = app.add_subcommand("enumerate", "All universe pairs with a given t");
  enumerate->add_option("--p", o.p, "Prime")->required();
  enumerate->add_option("--t", o.t, "Target corank")->required()->check(CLI::IsMember({4, 5}));
  enumerate->add_option("--max-total", o.max_total, "Bound on order_exp(N) + order_exp(K)")->required();
  enumerate->add_option("--cap", o.cap, "Largest accepted --max-total");

  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->add_option("--suite", o.suite, "Suite to run")
      ->check(CLI::IsMember({"abelian", "tensor-oracle", "additivity", "identity", "main-theorems", "all"}));
  verify->add_option("--p", o.primes, "Comma-separated primes")->delimiter(',');
  verify->add_option("--max-total", o.max_total, "Bound on total exponent of pairs");
  verify->add_option("--max-group", o.max_group, "Bound on exponent of single groups");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--trials", o.trials, "Random trials for the tensor oracle");
  verify->add_flag("--timing", o.timing, "Report elapsed time per suite");

  auto* catalog_cmd = app.add_subcommand("catalog", "Registered catalog groups");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "List all entries");
  auto* show = catalog_cmd->add_subcommand("show", "Show one entry");
  show->add_option("id", o.catalog_id, "Catalog id")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const ConfigFile config = read_config(o.config);
    const int jobs = o.jobs > 0 ? o.jobs : config.jobs.value_or(1);
    if (jobs <= 0) throw Error(ErrorKind::InvalidConfig, "jobs must be positive");
    const Catalog catalog = load_catalog(o, config);
    if (group->parsed()) return cmd_group(o, catalog, out);
    if (pair->parsed() || classify->parsed()) return cmd_pair(o, catalog, out);
    if (enumerate->parsed()) return cmd_enumerate(o, catalog, jobs, out);
    if (verify->parsed()) return cmd_verify(o, config, catalog, jobs, out);
    if (show->parsed()) return cmd_catalog_show(o, catalog, out);
    return cmd_catalog_list(o, catalog, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace schurpair::cli
