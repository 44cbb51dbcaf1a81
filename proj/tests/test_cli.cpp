#include <doctest.h>

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "zgap/cli.hpp"
#include "zgap/errors.hpp"

using namespace zgap;
using namespace zgap::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> json_lines(const std::string& s) {
  std::vector<Json> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) v.push_back(Json::parse(line));
  return v;
}

EnvLookup fake_env(std::map<std::string, std::string> vars) {
  auto store = std::make_shared<std::map<std::string, std::string>>(std::move(vars));
  return [store](const char* k) -> const char* {
    auto it = store->find(k);
    return it == store->end() ? nullptr : it->second.c_str();
  };
}

}  // namespace

TEST_CASE("config from environment") {
  const RunConfig d = config_from_env(fake_env({}));
  CHECK(d.precision_bits == 160);
  CHECK(d.quad_points == 15);
  CHECK(d.sieve_limit == 10'000'000);
  CHECK(d.zero_radius == 1e-9);
  CHECK(d.output_format == OutputFormat::Json);
  CHECK(d.seed == 0);

  const RunConfig c = config_from_env(fake_env({{"ZGAP_PRECISION_BITS", "256"},
                                                {"ZGAP_QUAD_POINTS", "20"},
                                                {"ZGAP_SIEVE_LIMIT", "1000000"},
                                                {"ZGAP_ZERO_RADIUS", "1e-8"},
                                                {"ZGAP_OUTPUT_FORMAT", "csv"},
                                                {"ZGAP_SEED", "42"}}));
  CHECK(c.precision_bits == 256);
  CHECK(c.quad_points == 20);
  CHECK(c.sieve_limit == 1'000'000);
  CHECK(c.zero_radius == 1e-8);
  CHECK(c.output_format == OutputFormat::Csv);
  CHECK(c.seed == 42);
  CHECK_THROWS(config_from_env(fake_env({{"ZGAP_QUAD_POINTS", "abc"}})));
}

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_NOTHROW(validate_config(c));
  c.precision_bits = 64;
  CHECK_THROWS_AS(validate_config(c), DomainError);
  c = {};
  c.quad_points = 9;
  CHECK_THROWS_AS(validate_config(c), DomainError);
  c = {};
  c.sieve_limit = 2'000'000'000;
  CHECK_THROWS_AS(validate_config(c), DomainError);
  c = {};
  c.zero_radius = 0.0;
  CHECK_THROWS_AS(validate_config(c), DomainError);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("suite rng is reproducible") {
  SuiteRng a(suite_seed(7, "mvh")), b(suite_seed(7, "mvh")), c(suite_seed(7, "gaps"));
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(suite_seed(7, "mvh") != suite_seed(7, "gaps"));
  CHECK(suite_seed(7, "mvh") != suite_seed(8, "mvh"));
  double m = 0.0, v = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double z = c.normal();
    m += z / n;
    v += z * z / n;
  }
  CHECK(std::abs(m) < 0.05);
  CHECK(std::abs(v - 1.0) < 0.05);
}

TEST_CASE("zeros command") {
  const Run r = run({"zeros", "--min", "10", "--max", "50", "--stats"});
  CHECK(r.code == 0);
  const auto recs = json_lines(r.out);
  REQUIRE(recs.size() >= 3);
  CHECK(recs[0]["record"] == "header");
  CHECK(recs[0]["command"] == "zeros");
  CHECK(recs[0]["config"]["precision_bits"] == 160);
  CHECK(recs[1]["record"] == "zero");
  CHECK(recs[1]["index"] == 1);
  CHECK(std::abs(recs[1]["gamma"].get<double>() - 14.134725141734694) < 1e-8);
  long zeros = 0;
  for (const auto& j : recs) zeros += j["record"] == "zero";
  CHECK(zeros == 10);
}

TEST_CASE("csv output") {
  const Run r = run({"--format", "csv", "zeros", "--min", "10", "--max", "30"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# {", 0) == 0);
  CHECK(r.out.find("index,gamma,radius\n1,14.13472514") != std::string::npos);
}

TEST_CASE("flags override environment") {
  setenv("ZGAP_QUAD_POINTS", "20", 1);
  setenv("ZGAP_SEED", "99", 1);
  const auto env_only = json_lines(run({"sfun", "--t", "100"}).out);
  CHECK(env_only[0]["config"]["quad_points"] == 20);
  CHECK(env_only[0]["config"]["seed"] == 99);
  const auto flagged = json_lines(run({"--quad-points", "7", "sfun", "--t", "100"}).out);
  CHECK(flagged[0]["config"]["quad_points"] == 7);
  CHECK(flagged[0]["config"]["seed"] == 99);
  unsetenv("ZGAP_QUAD_POINTS");
  unsetenv("ZGAP_SEED");
  setenv("ZGAP_PRECISION_BITS", "12", 1);
  const Run bad = run({"sfun", "--t", "100"});
  CHECK(bad.code == 2);
  unsetenv("ZGAP_PRECISION_BITS");
}

TEST_CASE("error records and exit codes") {
  const Run r = run({"zeros", "--min", "5", "--max", "20"});
  CHECK(r.code == 2);
  const auto recs = json_lines(r.out);
  REQUIRE_FALSE(recs.empty());
  CHECK(recs.back()["record"] == "error");
  CHECK(recs.back()["code"] == "DomainError");
  CHECK(run({"nosuchcommand"}).code == 2);
  CHECK(run({"--quad-points", "11", "sfun", "--t", "100"}).code == 2);
  CHECK(run({"constants", "--name", "bogus"}).code == 2);
}

TEST_CASE("constants command") {
  const Run one = run({"constants", "--name", "a1"});
  CHECK(one.code == 0);
  const auto recs = json_lines(one.out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[1]["name"] == "a1");
  CHECK(recs[1].contains("formula_anchor"));
  // The derived M2 exceeds the published value, so the audit reports it.
  const Run audit = run({"constants", "--audit"});
  CHECK(audit.code == 1);
  CHECK(json_lines(audit.out).back()["record"] == "audit");
}

TEST_CASE("primesum and moments commands") {
  const Run p = run({"primesum", "--X", "10000", "--h", "0.5,1"});
  CHECK(p.code == 0);
  const auto recs = json_lines(p.out);
  long rows = 0;
  for (const auto& j : recs)
    if (j.contains("op") && j["op"] == "prime_cos_sum") {
      ++rows;
      CHECK(j["holds"] == true);
    }
  CHECK(rows == 2);

  const Run m = run({"moments", "--T", "150", "--h", "0.5", "--powers", "2"});
  CHECK(m.code == 0);
  bool found = false;
  for (const auto& j : json_lines(m.out))
    if (j.contains("op") && j["op"] == "moment_J" && j["params"]["n"] == 2) {
      found = true;
      CHECK(j["value"].get<double>() > 0.0);
    }
  CHECK(found);
}

TEST_CASE("verify is deterministic") {
  const Run a = run({"--seed", "3", "verify", "--suite", "mvh", "--trials", "20"});
  const Run b = run({"--seed", "3", "verify", "--suite", "mvh", "--trials", "20"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto recs = json_lines(a.out);
  CHECK(recs.back()["record"] == "suite");
  CHECK(recs.back()["passed"] == true);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
