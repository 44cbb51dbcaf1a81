#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bernoulli.hpp>

#include "zgap/zeta.hpp"

namespace zgap::zeta {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
constexpr int kThetaTerms = 6;

}  // namespace

double rs_theta(double t) {
  if (!(t >= kMinHeight)) throw DomainError("rs_theta requires t >= 10");
  double v = 0.5 * t * std::log(t / (2.0 * kPi)) - 0.5 * t - kPi / 8.0;
  // sum_k (1 - 2^{1-2k}) |B_2k| / (4k (2k-1) t^{2k-1})
  const double inv = 1.0 / t, inv2 = inv * inv;
  double p = inv;
  for (int k = 1; k <= kThetaTerms; ++k) {
    double b = std::abs(boost::math::bernoulli_b2n<double>(k));
    v += (1.0 - std::ldexp(1.0, 1 - 2 * k)) * b / (4.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return v;
}

std::complex<double> log_gamma(std::complex<double> z) {
  using C = std::complex<double>;
  // Shift into the Stirling region; principal logs of the shift factors keep
  // the branch continuous for Im z >= 0.
  C shift(0.0, 0.0);
  while (z.real() < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const C inv = 1.0 / z, inv2 = inv * inv;
  C series(0.0, 0.0);
  C p = inv;
  for (int k = 1; k <= 12; ++k) {
    series += boost::math::bernoulli_b2n<double>(k) / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift;
}

double theta_exact(double t) {
  if (!(t > 0.0)) throw DomainError("theta_exact requires t > 0");
  return log_gamma({0.25, 0.5 * t}).imag() - 0.5 * t * std::log(kPi);
}

double theta_integral(double T) {
  if (!(T >= 0.0)) throw DomainError("theta_integral requires T >= 0");
  if (T == 0.0) return 0.0;
  auto f = [](double t) { return t > 0.0 ? theta_exact(t) : 0.0; };
  // Short panels keep the adaptive rule from over-refining near t = 0.
  double total = 0.0;
  for (double a = 0.0; a < T; a += 8.0) {
    double b = std::min(T, a + 8.0);
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 5, 1e-14);
  }
  return total;
}

double main_term(double t) {
  const double two_pi = 2.0 * kPi;
  return t * std::log(t) / two_pi - (1.0 + std::log(two_pi)) / two_pi * t + 7.0 / 8.0;
}

}  // namespace zgap::zeta
