#include <array>
#include <cmath>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "zgap/simd.hpp"
#include "zgap/zeta.hpp"

namespace zgap::zeta {

namespace {

#include "rs_coefficients.inc"

constexpr double kPi = boost::math::constants::pi<double>();
constexpr int kEmTerms = 30;

template <std::size_t N>
double horner(const std::array<double, N>& c, double x) {
  double v = 0.0;
  for (std::size_t i = N; i-- > 0;) v = v * x + c[i];
  return v;
}

void check_height(double t) {
  if (!(t >= kMinHeight)) throw DomainError("Z(t) requires t >= 10");
  if (t > kMaxHeight) throw DomainError("Z(t) refuses t > 1e7 (remainder contract)");
}

}  // namespace

std::complex<double> zeta_em(std::complex<double> s) {
  using C = std::complex<double>;
  const double sigma = s.real(), t = s.imag();
  if (!(sigma > 0.0)) throw DomainError("zeta_em requires Re s > 0");
  if (s == C(1.0, 0.0)) throw DomainError("zeta_em: pole at s = 1");
  const long N = std::max(20L, static_cast<long>(std::ceil(std::abs(t) / kPi)) + 10);

  std::vector<double> x(N - 1), w(N - 1);
  for (long n = 1; n < N; ++n) {
    x[n - 1] = std::log(static_cast<double>(n));
    w[n - 1] = std::exp(-sigma * x[n - 1]);
  }
  // n^{-s} = n^{-sigma} (cos(t log n) - i sin(t log n))
  const simd::PhaseSums ps = simd::phase_sums(t, 0.0, x, w);
  C sum(ps.cos_sum, ps.sin_sum);

  const double Nd = static_cast<double>(N);
  const C N_s = std::exp(-s * std::log(Nd));  // N^{-s}
  sum += N_s * Nd / (s - 1.0) + 0.5 * N_s;

  // B_2k/(2k)! * s(s+1)...(s+2k-2) N^{-s-2k+1}
  C rising = s;
  C power = N_s / Nd;
  for (int k = 1; k <= kEmTerms; ++k) {
    const double coef = boost::math::bernoulli_b2n<double>(k) /
                        boost::math::factorial<double>(static_cast<unsigned>(2 * k));
    const C term = coef * rising * power;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power /= Nd * Nd;
  }
  return sum;
}

double hardy_Z_em(double t) {
  if (!(t >= kMinHeight)) throw DomainError("Z(t) requires t >= 10");
  const std::complex<double> z = zeta_em({0.5, t});
  const double th = theta_exact(t);
  return (std::exp(std::complex<double>(0.0, th)) * z).real();
}

double hardy_Z_rs(double t) {
  check_height(t);
  const double tau = std::sqrt(t / (2.0 * kPi));
  const long N = static_cast<long>(std::floor(tau));
  const double th = rs_theta(t);

  std::vector<double> x(N), w(N);
  for (long n = 1; n <= N; ++n) {
    x[n - 1] = std::log(static_cast<double>(n));
    w[n - 1] = 1.0 / std::sqrt(static_cast<double>(n));
  }
  const simd::PhaseSums ps = simd::phase_sums(t, th, x, w);

  const double p = tau - static_cast<double>(N);
  const double z = p - 0.5;
  const double u = 1.0 / tau;
  const double rem = horner(kC0, z) +
                     u * (horner(kC1, z) + u * (horner(kC2, z) + u * (horner(kC3, z) + u * horner(kC4, z))));
  const double sign = (N - 1) % 2 == 0 ? 1.0 : -1.0;
  return 2.0 * ps.cos_sum + sign * rem / std::sqrt(tau);
}

double hardy_Z(double t) {
  check_height(t);
  return t < kRsCrossover ? hardy_Z_em(t) : hardy_Z_rs(t);
}

}  // namespace zgap::zeta
