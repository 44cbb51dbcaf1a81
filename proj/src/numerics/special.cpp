#include <cmath>
#include <complex>
#include <limits>

#include <boost/math/constants/constants.hpp>

#include "zgap/numerics.hpp"

namespace zgap::numerics {

namespace {

constexpr double kCinSwitch = 4.0;

double cin_series(double z) {
  // sum_{k>=1} (-1)^{k+1} z^{2k} / (2k (2k)!)
  double z2 = z * z;
  double term = z2 / 2.0;  // z^{2k}/(2k)! at k = 1
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    double add = term / (2.0 * k);
    sum += (k % 2 == 1) ? add : -add;
    if (add < 1e-18 * std::abs(sum)) break;
    term *= z2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
  }
  return sum;
}

// Ci(x) for x >= 4 from the continued fraction of E1(ix).
double ci_continued_fraction(double x) {
  using C = std::complex<double>;
  constexpr double tiny = 1e-300;
  C b(1.0, x);
  C c(1.0 / tiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 100000; ++i) {
    double a = -static_cast<double>(i - 1) * (i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16) break;
  }
  h *= C(std::cos(x), -std::sin(x));
  return -h.real();
}

}  // namespace

double cin(double z) {
  if (!(z >= 0.0)) throw DomainError("cin requires z >= 0");
  if (z == 0.0) return 0.0;
  if (z < kCinSwitch) return cin_series(z);
  return boost::math::constants::euler<double>() + std::log(z) - ci_continued_fraction(z);
}

}  // namespace zgap::numerics
