#include <cmath>
#include <cstdlib>
#include <string>

#include "zgap/cli.hpp"
#include "zgap/errors.hpp"
#include "zgap/primes.hpp"

namespace zgap::cli {

namespace {

template <typename T, typename Parse>
void apply(const EnvLookup& lookup, const char* name, T& field, Parse parse) {
  const char* v = lookup(name);
  if (v == nullptr || *v == '\0') return;
  try {
    field = parse(std::string(v));
  } catch (const std::logic_error&) {
    throw DomainError(std::string(name) + ": cannot parse '" + v + "'");
  }
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw DomainError("output format must be json or csv, got '" + s + "'");
}

RunConfig config_from_env(const EnvLookup& lookup) {
  RunConfig c;
  apply(lookup, "ZGAP_PRECISION_BITS", c.precision_bits, [](const std::string& s) { return std::stoi(s); });
  apply(lookup, "ZGAP_QUAD_POINTS", c.quad_points, [](const std::string& s) { return std::stoi(s); });
  apply(lookup, "ZGAP_SIEVE_LIMIT", c.sieve_limit,
        [](const std::string& s) { return static_cast<std::uint64_t>(std::stod(s)); });
  apply(lookup, "ZGAP_ZERO_RADIUS", c.zero_radius, [](const std::string& s) { return std::stod(s); });
  apply(lookup, "ZGAP_OUTPUT_FORMAT", c.output_format, parse_format);
  apply(lookup, "ZGAP_SEED", c.seed, [](const std::string& s) { return std::stoull(s); });
  return c;
}

RunConfig config_from_env() {
  return config_from_env([](const char* n) { return std::getenv(n); });
}

void validate_config(const RunConfig& c) {
  if (c.precision_bits < 128) throw DomainError("precision_bits must be at least 128");
  if (c.quad_points != 7 && c.quad_points != 15 && c.quad_points != 20 && c.quad_points != 30)
    throw DomainError("quad_points must be 7, 15, 20 or 30");
  if (c.sieve_limit < 2 || c.sieve_limit > primes::kMaxSieveLimit)
    throw DomainError("sieve_limit must lie in [2, 1e9]");
  if (!(c.zero_radius > 0.0) || c.zero_radius > 1e-3) throw DomainError("zero_radius must lie in (0, 1e-3]");
}

Json config_json(const RunConfig& c) {
  Json j;
  j["precision_bits"] = c.precision_bits;
  j["quad_points"] = c.quad_points;
  j["sieve_limit"] = c.sieve_limit;
  j["zero_radius"] = c.zero_radius;
  j["output_format"] = c.output_format == OutputFormat::Json ? "json" : "csv";
  j["seed"] = c.seed;
  return j;
}

double SuiteRng::normal() {
  // Box-Muller, cosine branch only; 1 - u keeps the log argument positive.
  const double u = 1.0 - uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : suite) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

}  // namespace zgap::cli
