#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zgap/primes.hpp"
#include "zgap/simd.hpp"

namespace zgap::primes {

namespace {

constexpr std::size_t kChunk = 4096;

void require_cover(const PrimeTable& t, double X) {
  if (!t.covers(X)) throw TableTooSmall("prime table limit below " + std::to_string(X));
}

}  // namespace

double von_mangoldt(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

double lambda_x_weight(double n, double x, double lambda_n) {
  if (lambda_n == 0.0 || n < 1.0) return 0.0;
  const double lx = std::log(x);
  const double x2 = x * x, x3 = x2 * x;
  if (n <= x) return lambda_n;
  const double l3 = std::log(x3 / n);
  if (n <= x2) {
    const double l2 = std::log(x2 / n);
    return lambda_n * (l3 * l3 - 2.0 * l2 * l2) / (2.0 * lx * lx);
  }
  if (n <= x3) return lambda_n * l3 * l3 / (2.0 * lx * lx);
  return 0.0;
}

double lambda_x(std::uint64_t n, double x) {
  if (n < 2) throw DomainError("lambda_x requires n >= 2");
  if (x < 2.0) throw DomainError("lambda_x requires x >= 2");
  return lambda_x_weight(static_cast<double>(n), x, von_mangoldt(n));
}

std::vector<PrimePower> prime_powers_upto(double N, const PrimeTable& t) {
  require_cover(t, N);
  std::vector<PrimePower> out;
  if (N < 2.0) return out;
  const auto bound = static_cast<std::uint64_t>(std::floor(N));
  for (std::uint32_t p : t.primes) {
    if (p > bound) break;
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = p; q <= bound; q *= p) {
      out.push_back({q, p, lp});
      if (q > bound / p) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.n < b.n; });
  return out;
}

double prime_cos_sum(double X, double h, const PrimeTable& t) {
  require_cover(t, X);
  const std::size_t n = t.count_upto(X);
  simd::CompensatedSum total;
  std::vector<double> lx(kChunk), w(kChunk);
  for (std::size_t i = 0; i < n; i += kChunk) {
    const std::size_t m = std::min(kChunk, n - i);
    for (std::size_t j = 0; j < m; ++j) {
      const double p = t.primes[i + j];
      lx[j] = std::log(p);
      w[j] = 1.0 / p;
    }
    total.add(simd::versine_sum(h, {lx.data(), m}, {w.data(), m}));
  }
  return total.value();
}

double weighted_logp_sum(double X, const PrimeTable& t) {
  require_cover(t, X);
  const std::size_t n = t.count_upto(X);
  simd::CompensatedSum s;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = t.primes[i];
    s.add(std::log(p) / p);
  }
  const double v = s.value();
  if (X >= 2.0 && v > std::log(X)) throw std::logic_error("sum of log p / p exceeds log X");
  return v;
}

std::complex<double> r_xt(double x, double t, double sigma, const PrimeTable& table) {
  if (x < 2.0) throw DomainError("r_xt requires x >= 2");
  const double x3 = x * x * x;
  require_cover(table, x3);
  const std::vector<PrimePower> pp = prime_powers_upto(x3, table);
  std::vector<double> logn(pp.size()), w(pp.size());
  for (std::size_t i = 0; i < pp.size(); ++i) {
    const double nd = static_cast<double>(pp[i].n);
    logn[i] = std::log(nd);
    w[i] = lambda_x_weight(nd, x, pp[i].log_p) * std::exp(-sigma * logn[i]);
  }
  // n^{-it} = cos(t log n) - i sin(t log n)
  simd::PhaseSums s = simd::phase_sums(t, 0.0, logn, w);
  return {s.cos_sum, s.sin_sum};
}

}  // namespace zgap::primes
