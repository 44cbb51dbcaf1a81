#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "zgap/zeros.hpp"

namespace zgap::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

enum class OutputFormat { Json, Csv };

struct RunConfig {
  int precision_bits = 160;
  int quad_points = 15;
  std::uint64_t sieve_limit = 10'000'000;
  double zero_radius = 1e-9;
  OutputFormat output_format = OutputFormat::Json;
  std::uint64_t seed = 0;
};

using EnvLookup = std::function<const char*(const char*)>;

// Defaults overridden by ZGAP_PRECISION_BITS, ZGAP_QUAD_POINTS,
// ZGAP_SIEVE_LIMIT, ZGAP_ZERO_RADIUS, ZGAP_OUTPUT_FORMAT, ZGAP_SEED.
RunConfig config_from_env(const EnvLookup& lookup);
RunConfig config_from_env();
// Throws DomainError on out-of-range fields.
void validate_config(const RunConfig& c);
Json config_json(const RunConfig& c);
OutputFormat parse_format(const std::string& s);

// mt19937_64 with the double and normal constructions written out, so the
// streams do not depend on the standard library's distributions.
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }
  double normal();

 private:
  std::mt19937_64 gen_;
};

// Seed of one suite, independent of which other suites run.
std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite);

struct Check {
  std::string name;
  bool passed = false;
  Json detail = Json::object();
  // Reported but not asserted (e.g. a published value we do not reproduce).
  bool informational = false;
};

// Assertion groups shared by `verify` and the acceptance binary.
namespace checks {
std::vector<Check> constant_bounds();   // C(1/88, k) published bounds, omega0 dominance
std::vector<Check> m2_gate();           // 30.76 passes, 30.75 fails, certified signs
std::vector<Check> gap_pipeline();      // M1, c0, kappa, delta, coefficient
std::vector<Check> ideal_lambda();
std::vector<Check> zeta_counts(const zeros::ZeroList& zl_10_1000);
std::vector<Check> gap_statistics(const zeros::ZeroList& zl_from_10, const zeros::ZeroList& zl_1000_2000,
                                  SuiteRng& rng);
std::vector<Check> moment_bands(const zeros::ZeroList& zl, double T, int quad_points);
std::vector<Check> holder(const zeros::ZeroList& zl, double T, SuiteRng& rng, int quad_points);
std::vector<Check> mvh(long trials, SuiteRng& rng);
std::vector<Check> imag_moment(long trials, SuiteRng& rng);
std::vector<Check> primesum(std::uint64_t sieve_limit);
}  // namespace checks

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"mvh", "imag_moment", "primesum", "constants", "holder", "gaps"};
  return names;
}

// Runs one suite (or "all"), writing records to out. Returns the exit code.
int run_verify(const std::string& suite, long trials, const RunConfig& cfg, std::ostream& out);

// Entry point behind the zgap executable; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zgap::cli
