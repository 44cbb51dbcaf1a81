#include <cmath>
#include <numbers>
#include <vector>

#include "zgap/constants.hpp"
#include "zgap/moments.hpp"
#include "zgap/simd.hpp"

namespace zgap::moments {

namespace {

constexpr double kPi = std::numbers::pi;

struct PrimeWeights {
  std::vector<double> log_p, inv_sqrt_p;
};

PrimeWeights prime_weights(double X, const primes::PrimeTable& table) {
  if (!table.covers(X)) throw TableTooSmall("prime table limit below " + std::to_string(X));
  PrimeWeights pw;
  const std::size_t n = table.count_upto(X);
  pw.log_p.resize(n);
  pw.inv_sqrt_p.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = table.primes[i];
    pw.log_p[i] = std::log(p);
    pw.inv_sqrt_p[i] = 1.0 / std::sqrt(p);
  }
  return pw;
}

double cutoff(double T, double eps, int k) {
  if (k < 1) throw DomainError("k must be a positive integer");
  if (!(T > 1.0) || !(eps > 0.0)) throw DomainError("Dirichlet approximants need T > 1, eps > 0");
  return std::pow(T, eps / k);
}

}  // namespace

double dirichlet_P(int k, double t, double h, double T, double eps, const primes::PrimeTable& table) {
  const PrimeWeights pw = prime_weights(cutoff(T, eps, k), table);
  if (h == 0.0) return 0.0;
  // Im{p^{-1/2}(p^{-ih} - 1) p^{-it}} = p^{-1/2}(sin(t log p) - sin((t+h) log p))
  const double s_t = simd::phase_sums(t, 0.0, pw.log_p, pw.inv_sqrt_p).sin_sum;
  const double s_th = simd::phase_sums(t + h, 0.0, pw.log_p, pw.inv_sqrt_p).sin_sum;
  return (s_th - s_t) / kPi;
}

double dirichlet_Q(int k, double t, double T, double eps, const primes::PrimeTable& table,
                   const zeros::ZeroList& zl) {
  const PrimeWeights pw = prime_weights(cutoff(T, eps, k), table);
  const double s = s_from_zeros(t, zl);
  // phase_sums gives sum w sin(-t x)
  return s - simd::phase_sums(t, 0.0, pw.log_p, pw.inv_sqrt_p).sin_sum / kPi;
}

SelbergResidual selberg_residual(double t, double x, const primes::PrimeTable& table, const zeros::ZeroList& zl) {
  if (!(x >= 2.0) || !(x <= t * t)) throw DomainError("selberg_residual requires 2 <= x <= t^2");
  SelbergResidual r;
  r.sigma = zeros::sigma_xt(x, t, zl);
  const double x3 = x * x * x;
  if (!table.covers(x3)) throw TableTooSmall("selberg_residual: prime table limit below x^3");

  const auto pp = primes::prime_powers_upto(x3, table);
  std::vector<double> logn(pp.size()), w(pp.size());
  for (std::size_t i = 0; i < pp.size(); ++i) {
    const double nd = static_cast<double>(pp[i].n);
    logn[i] = std::log(nd);
    w[i] = primes::lambda_x_weight(nd, x, pp[i].log_p) * std::exp(-r.sigma * logn[i]) / logn[i];
  }
  const double sin_sum = -simd::phase_sums(t, 0.0, logn, w).sin_sum;  // sum w sin(t log n)
  r.residual = std::abs(s_from_zeros(t, zl) + sin_sum / kPi);

  const double rx = std::abs(primes::r_xt(x, t, r.sigma, table));
  const double a1 = constants::a1().hi_double();
  const double a2 = constants::a2(numerics::RigorousBound::from_double(x)).hi_double();
  r.bound = (r.sigma - 0.5) * (a1 * rx + a2 * std::log(std::abs(t)));
  return r;
}

}  // namespace zgap::moments
