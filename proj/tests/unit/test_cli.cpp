#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "schurpair/cli.hpp"

using namespace schurpair;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pair report") {
  const auto r = run({"pair", "--p", "2", "--N", "Q8", "--K", "Z(p)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2.1/18") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"--format", "json", "pair", "--p", "2", "--N", "Q8", "--K", "Z(p)"}).out);
  CHECK(j["n"] == 3);
  CHECK(j["m"] == 1);
  CHECK(j["boundExp"] == 6);
  CHECK(j["multExp"] == 2);
  CHECK(j["t"] == 4);
  CHECK(j["matches"] == nlohmann::json::array({"2.1/18"}));
  CHECK(j["caveats"].is_array());
}

TEST_CASE("classify is the same report") {
  const auto a = run({"pair", "--format", "json", "--p", "3", "--N", "Z(p^2)", "--K", "Z(p^3)"});
  const auto b = run({"classify", "--format", "json", "--p", "3", "--N", "Z(p^2)", "--K", "Z(p^3)"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["matches"] == nlohmann::json::array({"2.2/36"}));
}

TEST_CASE("group report") {
  const auto r = run({"group", "--p", "3", "--expr", "Z(p^2) x Z(p^2)", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["t"] == 4);
  CHECK(j["families"] == nlohmann::json::array({"Thm 1.4"}));
}

TEST_CASE("json output is byte-stable") {
  const std::vector<std::string> args = {"--format", "json", "enumerate", "--p", "2", "--t", "4", "--max-total", "5",
                                         "--jobs", "3"};
  CHECK(run(args).out == run(args).out);
  CHECK(run(args).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"group", "--p", "4", "--expr", "1"}).code == cli::kUsage);
  CHECK(run({"group", "--p", "2", "--expr", "Z(p"}).code == cli::kUsage);
  CHECK(run({"group", "--p", "3", "--expr", "Q8"}).code == cli::kDomain);
  CHECK(run({"group", "--p", "2", "--expr", "D8 x Q8"}).code == cli::kDomain);
  CHECK(run({"enumerate", "--p", "2", "--t", "4", "--max-total", "9"}).code == cli::kCapExceeded);
  CHECK(run({"enumerate", "--p", "2", "--t", "3", "--max-total", "4"}).code == cli::kUsage);
  CHECK(run({"catalog", "show", "nope"}).code == cli::kDomain);
  CHECK(run({"--fixtures", "/nonexistent.json", "catalog", "list"}).code == cli::kDomain);
  const auto r = run({"group", "--p", "3", "--expr", "Q8"});
  CHECK(r.err.find("PrimeConstraintViolation") != std::string::npos);
}

TEST_CASE("catalog commands") {
  const auto list = run({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("thm4_7") != std::string::npos);
  const auto show = nlohmann::json::parse(run({"--format", "json", "catalog", "show", "Q8"}).out);
  CHECK(show["t"] == 3);
  CHECK(show["ab"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("verify suites and config") {
  CHECK(run({"verify", "--suite", "abelian", "--p", "2,3,5"}).code == 0);
  const auto path = std::filesystem::temp_directory_path() / "schurpair_cli_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"primes": [3], "max_total_exp": 4, "trials": 5})";
  }
  const auto r = run({"--config", path.string(), "--format", "json", "verify", "--suite", "tensor-oracle"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j[0]["suite"] == "tensor-oracle");
  CHECK(j[0]["instances"] == 400 + 5);
  {
    std::ofstream f(path);
    f << R"({"bogus": 1})";
  }
  CHECK(run({"--config", path.string(), "catalog", "list"}).code == cli::kUsage);
  std::filesystem::remove(path);
}
