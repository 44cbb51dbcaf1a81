#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>

#include "zgap/errors.hpp"
#include "zgap/primes.hpp"

using namespace zgap;
using namespace zgap::primes;

TEST_CASE("sieve counts") {
  const PrimeTable t = sieve(10'000'000);
  CHECK(t.primes.size() == 664579);
  CHECK(t.count_upto(1e6) == 78498);
  CHECK(t.count_upto(100) == 25);
  CHECK(t.count_upto(2) == 1);
  CHECK(t.count_upto(1.5) == 0);
  CHECK(t.primes.back() == 9999991u);
  CHECK(t.covers(1e7));
  CHECK_FALSE(t.covers(1e7 + 1));
}

TEST_CASE("segmented sieve matches the plain sieve") {
  for (std::uint64_t lim : {2ull, 3ull, 30ull, 65536ull, 65537ull, 1'000'003ull}) {
    const PrimeTable t = sieve(lim);
    CHECK(t.primes == simple_sieve(lim));
  }
  CHECK_THROWS_AS(sieve(kMaxSieveLimit + 1), LimitTooLarge);
}

TEST_CASE("prime cache round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "zgap_test_primes.bin").string();
  const PrimeTable t = sieve(100000);
  save_cache(t, path);
  const auto back = load_cache(path);
  REQUIRE(back.has_value());
  CHECK(back->limit == t.limit);
  CHECK(back->primes == t.primes);
  const PrimeTable smaller = sieve_cached(5000, path);
  CHECK(smaller.count_upto(5000) == 669);
  std::remove(path.c_str());
  CHECK_FALSE(load_cache(path).has_value());
}

TEST_CASE("von Mangoldt and Selberg weights") {
  CHECK(von_mangoldt(1) == 0.0);
  CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)));
  CHECK(von_mangoldt(49) == doctest::Approx(std::log(7.0)));
  CHECK(von_mangoldt(12) == 0.0);
  CHECK(von_mangoldt(9999991) == doctest::Approx(std::log(9999991.0)));
  const double x = 10.0;
  CHECK(lambda_x(7, x) == doctest::Approx(std::log(7.0)));
  // Continuous at x, x^2 and x^3.
  const double l = std::log(2.0);
  CHECK(lambda_x_weight(x * (1 + 1e-12), x, l) == doctest::Approx(l).epsilon(1e-9));
  CHECK(lambda_x_weight(x * x * (1 - 1e-12), x, l) ==
        doctest::Approx(lambda_x_weight(x * x * (1 + 1e-12), x, l)).epsilon(1e-9));
  CHECK(std::abs(lambda_x_weight(x * x * x * (1 - 1e-12), x, l)) < 1e-12);
  CHECK(lambda_x_weight(x * x * x * 1.01, x, l) == 0.0);
}

TEST_CASE("prime powers") {
  const PrimeTable t = sieve(100);
  const auto pp = prime_powers_upto(30, t);
  std::vector<std::uint64_t> ns;
  for (const auto& p : pp) ns.push_back(p.n);
  CHECK(ns == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29});
  CHECK_THROWS_AS(prime_powers_upto(1000, t), TableTooSmall);
}

TEST_CASE("prime sums against direct loops") {
  const PrimeTable t = sieve(100000);
  for (double h : {0.1, 0.5, 2.0}) {
    double direct = 0.0;
    for (auto p : t.primes) {
      if (p > 1000) break;
      direct += (1.0 - std::cos(h * std::log(p))) / p;
    }
    CHECK(prime_cos_sum(1000, h, t) == doctest::Approx(direct).epsilon(1e-13));
  }
  double s = 0.0;
  for (auto p : t.primes) s += std::log(p) / p;
  CHECK(weighted_logp_sum(1e5, t) == doctest::Approx(s).epsilon(1e-13));
  CHECK(weighted_logp_sum(1e5, t) <= std::log(1e5));
}

TEST_CASE("r_xt against a direct loop") {
  const PrimeTable t = sieve(100000);
  const double x = 20.0, tt = 1234.5, sigma = 0.6;
  std::complex<double> direct = 0.0;
  for (std::uint64_t n = 2; n <= 8000; ++n) {
    const double w = lambda_x(n, x);
    if (w == 0.0) continue;
    direct += w * std::pow(static_cast<double>(n), -sigma) * std::polar(1.0, -tt * std::log(double(n)));
  }
  const auto r = r_xt(x, tt, sigma, t);
  CHECK(std::abs(r - direct) < 1e-11 * (1 + std::abs(direct)));
  CHECK_THROWS_AS(r_xt(1.0, tt, sigma, t), DomainError);
  CHECK_THROWS_AS(r_xt(100.0, tt, sigma, t), TableTooSmall);
}
