#include <ostream>

#include "emitter.hpp"
#include "zgap/cli.hpp"
#include "zgap/zeros.hpp"

namespace zgap::cli {

namespace {

std::vector<Check> run_suite(const std::string& suite, long trials, const RunConfig& cfg) {
  SuiteRng rng(suite_seed(cfg.seed, suite));
  if (suite == "mvh") return checks::mvh(trials, rng);
  if (suite == "imag_moment") return checks::imag_moment(trials, rng);
  if (suite == "primesum") return checks::primesum(cfg.sieve_limit);
  if (suite == "constants") {
    std::vector<Check> out;
    for (auto group : {checks::constant_bounds(), checks::m2_gate(), checks::gap_pipeline(), checks::ideal_lambda()})
      out.insert(out.end(), group.begin(), group.end());
    return out;
  }
  if (suite == "holder") {
    const auto zl = zeros::isolate_zeros(1000.0, 2001.0, cfg.zero_radius);
    return checks::holder(zl, 1000.0, rng, cfg.quad_points);
  }
  if (suite == "gaps") {
    const auto zl = zeros::isolate_zeros(10.0, 2000.0, cfg.zero_radius);
    auto out = checks::zeta_counts(zl);
    auto g = checks::gap_statistics(zl, zeros::restrict(zl, 1000.0, 2000.0), rng);
    out.insert(out.end(), g.begin(), g.end());
    return out;
  }
  throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace

int run_verify(const std::string& suite, long trials, const RunConfig& cfg, std::ostream& out) {
  if (trials < 1) throw DomainError("trials must be positive");
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(suite);
  }
  Emitter em(out, cfg.output_format);
  bool all_passed = true;
  Json summary = Json::array();
  for (const auto& s : suites) {
    const auto results = run_suite(s, trials, cfg);
    long failures = 0;
    for (const auto& c : results) {
      Json r;
      r["record"] = "check";
      r["suite"] = s;
      r["check"] = c.name;
      r["passed"] = c.passed;
      r["informational"] = c.informational;
      r["detail"] = c.detail;
      em.record(r);
      if (!c.passed && !c.informational) ++failures;
    }
    Json r;
    r["record"] = "suite";
    r["suite"] = s;
    r["passed"] = failures == 0;
    r["checks"] = results.size();
    r["failures"] = failures;
    em.record(r);
    summary.push_back({{"suite", s}, {"passed", failures == 0}});
    all_passed = all_passed && failures == 0;
  }
  if (suites.size() > 1) {
    Json r;
    r["record"] = "summary";
    r["passed"] = all_passed;
    r["suites"] = summary;
    em.record(r);
  }
  return all_passed ? 0 : 1;
}

}  // namespace zgap::cli
