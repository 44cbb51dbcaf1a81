#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>

namespace zgap::simd {

// Sums of w_i cos(phase + phi_i - t x_i) and w_i sin(...).
struct PhaseSums {
  double cos_sum = 0.0;
  double sin_sum = 0.0;
};

enum class Backend { Scalar, Avx2 };

// Arguments beyond this magnitude go through the scalar path (the vector
// argument reduction loses accuracy there).
inline constexpr double kMaxVectorArg = 536870912.0;  // 2^29

// phi may be empty, meaning all zeros.
PhaseSums phase_sums(double t, double phase, std::span<const double> x, std::span<const double> w,
                     std::span<const double> phi = {});

// Sum of w_i * 2 sin^2(h x_i / 2), i.e. w_i (1 - cos(h x_i)) without cancellation.
double versine_sum(double h, std::span<const double> x, std::span<const double> w);

Backend active_backend();
const char* backend_name(Backend b);
bool avx2_available();
// Test hook; nullopt restores automatic selection.
void set_backend_override(std::optional<Backend> b);

namespace scalar {
PhaseSums phase_sums(double t, double phase, std::span<const double> x, std::span<const double> w,
                     std::span<const double> phi);
double versine_sum(double h, std::span<const double> x, std::span<const double> w);
}  // namespace scalar

namespace avx2 {
PhaseSums phase_sums(double t, double phase, std::span<const double> x, std::span<const double> w,
                     std::span<const double> phi);
double versine_sum(double h, std::span<const double> x, std::span<const double> w);
}  // namespace avx2

// Neumaier compensated accumulator, shared by the kernels and the callers
// that need reproducible long sums.
class CompensatedSum {
 public:
  void add(double v) {
    double t = s_ + v;
    if (std::fabs(s_) >= std::fabs(v)) {
      c_ += (s_ - t) + v;
    } else {
      c_ += (v - t) + s_;
    }
    s_ = t;
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace zgap::simd
