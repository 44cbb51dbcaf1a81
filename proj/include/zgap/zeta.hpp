#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "zgap/errors.hpp"

namespace zgap::zeta {

inline constexpr double kMinHeight = 10.0;
inline constexpr double kMaxHeight = 1e7;
// Below this height Z uses Euler-Maclaurin, above it Riemann-Siegel.
inline constexpr double kRsCrossover = 200.0;
inline constexpr double kZeroExclusion = 1e-6;

// Asymptotic Riemann-Siegel theta, t >= 10.
double rs_theta(double t);
// Im log Gamma(1/4 + it/2) - (t/2) log pi on the continuous branch, t > 0.
double theta_exact(double t);
// integral_0^T theta_exact
double theta_integral(double T);
// Continuous-branch log Gamma for Im z >= 0 or Re z > 0.
std::complex<double> log_gamma(std::complex<double> z);

// zeta(s) by Euler-Maclaurin summation; Re s > 0, s != 1.
std::complex<double> zeta_em(std::complex<double> s);

double hardy_Z(double t);
double hardy_Z_em(double t);
double hardy_Z_rs(double t);

// (1/2pi) t log t - ((1 + log 2pi)/2pi) t + 7/8
double main_term(double t);

struct SignChangeScan {
  double a = 0.0;
  double b = 0.0;
  double step = 0.0;  // final grid step
  int refinements = 0;
  bool stable = false;  // count unchanged over the last two halvings
  std::vector<std::pair<double, double>> brackets;
};

// Sign changes of Z on [a, b], grid starting at step_scale * 0.2/log b and
// halved until the count is unchanged twice.
SignChangeScan scan_sign_changes(double a, double b, double step_scale = 1.0);
// Bisection of a sign-changing bracket down to width tol.
std::pair<double, double> refine_zero(double a, double b, double tol);
// Throws TooCloseToZero when Z changes sign within kZeroExclusion of t.
void check_not_near_zero(double t);

struct CountResult {
  long count = 0;
  bool certified = false;
  double implied_S = 0.0;
};

// Zeros with ordinate in (0, t]; (0, 10] is zero-free.
CountResult count_N(double t);

enum class SMethod { ARG_TRACKING, COUNT_MINUS_MAIN };
const char* to_string(SMethod m);

struct SFunSample {
  double t = 0.0;
  double s_value = 0.0;
  SMethod method = SMethod::COUNT_MINUS_MAIN;
  double est_error = 0.0;
};

SFunSample s_of_t(double t, SMethod method = SMethod::COUNT_MINUS_MAIN);
// COUNT_MINUS_MAIN given an already known N(t).
SFunSample s_from_count(double t, long count);
double count_minus_main_error(double t);

// S1(T) from the ordinates in (0, T] via N(t) = theta(t)/pi + 1 + S(t).
double s1_from_ordinates(double T, const std::vector<double>& ordinates);
// Isolates the zeros below T itself.
double s1_of_T(double T);

}  // namespace zgap::zeta
