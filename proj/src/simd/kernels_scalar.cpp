#include <cmath>

#include "zgap/simd.hpp"

namespace zgap::simd::scalar {

PhaseSums phase_sums(double t, double phase, std::span<const double> x, std::span<const double> w,
                     std::span<const double> phi) {
  CompensatedSum c, s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double arg = std::fma(-t, x[i], phase);
    if (!phi.empty()) arg += phi[i];
    c.add(w[i] * std::cos(arg));
    s.add(w[i] * std::sin(arg));
  }
  return {c.value(), s.value()};
}

double versine_sum(double h, std::span<const double> x, std::span<const double> w) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double sn = std::sin(0.5 * h * x[i]);
    acc.add(w[i] * 2.0 * sn * sn);
  }
  return acc.value();
}

}  // namespace zgap::simd::scalar
