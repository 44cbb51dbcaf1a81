#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zgap/errors.hpp"

namespace zgap::primes {

inline constexpr std::uint64_t kMaxSieveLimit = 1'000'000'000ULL;

struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint32_t> primes;  // every prime <= limit, ascending

  bool covers(double X) const { return X <= static_cast<double>(limit); }
  // Number of primes <= X.
  std::size_t count_upto(double X) const;
};

// Segmented sieve of Eratosthenes.
PrimeTable sieve(std::uint64_t limit);
// Plain sieve, used as a cross-check on small ranges.
std::vector<std::uint32_t> simple_sieve(std::uint64_t limit);

// Binary cache: "ZGAPPRM1", u64 limit, u64 count, then u64 primes, all
// little-endian.
void save_cache(const PrimeTable& t, const std::string& path);
std::optional<PrimeTable> load_cache(const std::string& path);
// Loads a cache with limit >= the request, otherwise sieves and writes it.
PrimeTable sieve_cached(std::uint64_t limit, const std::string& path);

// Lambda(n): log p if n = p^r, else 0.
double von_mangoldt(std::uint64_t n);

// Selberg's weight with a real-valued n; lambda_n is Lambda(n).
double lambda_x_weight(double n, double x, double lambda_n);
double lambda_x(std::uint64_t n, double x);

struct PrimePower {
  std::uint64_t n;
  std::uint32_t p;
  double log_p;
};

// All prime powers n <= N, ascending in n.
std::vector<PrimePower> prime_powers_upto(double N, const PrimeTable& t);

double prime_cos_sum(double X, double h, const PrimeTable& t);
double weighted_logp_sum(double X, const PrimeTable& t);
std::complex<double> r_xt(double x, double t, double sigma, const PrimeTable& table);

}  // namespace zgap::primes
