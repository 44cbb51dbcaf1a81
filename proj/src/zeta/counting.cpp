#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zgap/zeta.hpp"

namespace zgap::zeta {

namespace {

constexpr int kMaxRefinements = 12;
constexpr double kCertifiedS = 1.1;

// ARG_TRACKING step control
constexpr double kArgStepStart = 0.1;
constexpr double kArgStepMax = 0.25;
constexpr double kArgStepMin = 1e-7;
constexpr double kArgStepMaxTurn = std::numbers::pi / 4.0;
constexpr double kArgConsistency = 1e-9;
constexpr double kArgEstError = 1e-8;

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

long count_changes(const std::vector<double>& z) {
  long c = 0;
  for (std::size_t i = 1; i < z.size(); ++i)
    if (sign_of(z[i - 1]) * sign_of(z[i]) < 0) ++c;
  return c;
}

}  // namespace

SignChangeScan scan_sign_changes(double a, double b, double step_scale) {
  if (!(a >= kMinHeight) || !(b > a)) throw DomainError("scan_sign_changes requires 10 <= a < b");
  if (b > kMaxHeight) throw DomainError("scan_sign_changes: b beyond 1e7");
  SignChangeScan scan;
  scan.a = a;
  scan.b = b;

  if (!(step_scale > 0.0)) throw DomainError("scan_sign_changes: step_scale must be positive");
  const double step0 = step_scale * 0.2 / std::log(b);
  const long n = std::max(1L, static_cast<long>(std::ceil((b - a) / step0)));
  std::vector<double> ts(n + 1), zs(n + 1);
  for (long i = 0; i <= n; ++i) {
    ts[i] = i == n ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
    zs[i] = hardy_Z(ts[i]);
  }
  scan.step = (b - a) / static_cast<double>(n);

  long count = count_changes(zs);
  int unchanged = 0;
  while (unchanged < 2 && scan.refinements < kMaxRefinements) {
    std::vector<double> ts2, zs2;
    ts2.reserve(2 * ts.size());
    zs2.reserve(2 * ts.size());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      const double mid = 0.5 * (ts[i] + ts[i + 1]);
      ts2.push_back(ts[i]);
      zs2.push_back(zs[i]);
      ts2.push_back(mid);
      zs2.push_back(hardy_Z(mid));
    }
    ts2.push_back(ts.back());
    zs2.push_back(zs.back());
    ts.swap(ts2);
    zs.swap(zs2);
    scan.step *= 0.5;
    ++scan.refinements;
    const long c = count_changes(zs);
    unchanged = c == count ? unchanged + 1 : 0;
    count = c;
  }
  scan.stable = unchanged >= 2;

  for (std::size_t i = 1; i < zs.size(); ++i)
    if (sign_of(zs[i - 1]) * sign_of(zs[i]) < 0) scan.brackets.emplace_back(ts[i - 1], ts[i]);
  return scan;
}

std::pair<double, double> refine_zero(double a, double b, double tol) {
  double za = hardy_Z(a);
  const double zb = hardy_Z(b);
  if (sign_of(za) * sign_of(zb) >= 0) throw NoBracket("refine_zero: Z does not change sign");
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double zm = hardy_Z(m);
    if (zm == 0.0) return {m, m};
    if (sign_of(zm) == sign_of(za)) {
      a = m;
      za = zm;
    } else {
      b = m;
    }
  }
  return {a, b};
}

void check_not_near_zero(double t) {
  if (t - kZeroExclusion < kMinHeight) return;  // (0, 10] holds no ordinate
  const double lo = hardy_Z(t - kZeroExclusion), hi = hardy_Z(t + kZeroExclusion);
  if (sign_of(lo) * sign_of(hi) <= 0)
    throw TooCloseToZero("t = " + std::to_string(t) + " is within 1e-6 of a zero ordinate");
}

CountResult count_N(double t) {
  if (!(t > 0.0)) throw DomainError("count_N requires t > 0");
  CountResult r;
  if (t <= kMinHeight) {
    r.certified = true;
    return r;
  }
  check_not_near_zero(t);
  const SignChangeScan scan = scan_sign_changes(kMinHeight, t);
  r.count = static_cast<long>(scan.brackets.size());
  r.implied_S = static_cast<double>(r.count) - main_term(t);
  r.certified = scan.stable && std::abs(r.implied_S) <= kCertifiedS;
  return r;
}

const char* to_string(SMethod m) {
  return m == SMethod::ARG_TRACKING ? "ARG_TRACKING" : "COUNT_MINUS_MAIN";
}

double count_minus_main_error(double t) { return 1.0 / (7.0 * t) + 1e-12; }

SFunSample s_from_count(double t, long count) {
  SFunSample s;
  s.t = t;
  s.method = SMethod::COUNT_MINUS_MAIN;
  s.s_value = static_cast<double>(count) - main_term(t);
  s.est_error = count_minus_main_error(t);
  return s;
}

namespace {

// arg zeta(1/2 + it), continuous along 2 -> 2+it -> 1/2+it, divided by pi.
double s_by_argument(double t) {
  using C = std::complex<double>;
  // Re zeta(2+it) >= 2 - pi^2/6 > 0, so the principal branch is the right one.
  double sigma = 2.0;
  C z = zeta_em({sigma, t});
  double arg = std::arg(z);
  double h = kArgStepStart;
  while (sigma > 0.5) {
    const double step = std::min(h, sigma - 0.5);
    const double s_end = sigma - step;
    const C z_mid = zeta_em({sigma - 0.5 * step, t});
    const C z_end = zeta_em({s_end, t});
    const double d1 = std::arg(z_mid / z);
    const double d2 = std::arg(z_end / z_mid);
    const double d = std::arg(z_end / z);
    const bool ok = std::abs(d1) < kArgStepMaxTurn && std::abs(d2) < kArgStepMaxTurn &&
                    std::abs(d - (d1 + d2)) < kArgConsistency;
    if (!ok) {
      h = 0.5 * step;
      if (h < kArgStepMin) throw TooCloseToZero("argument tracking step collapsed near a zero");
      continue;
    }
    arg += d1 + d2;
    sigma = s_end;
    z = z_end;
    h = std::min(kArgStepMax, 1.5 * step);
  }
  return arg / std::numbers::pi;
}

}  // namespace

SFunSample s_of_t(double t, SMethod method) {
  if (!(t >= kMinHeight)) throw DomainError("s_of_t requires t >= 10");
  check_not_near_zero(t);
  if (method == SMethod::COUNT_MINUS_MAIN) return s_from_count(t, count_N(t).count);
  SFunSample s;
  s.t = t;
  s.method = SMethod::ARG_TRACKING;
  s.s_value = s_by_argument(t);
  s.est_error = kArgEstError;
  return s;
}

double s1_from_ordinates(double T, const std::vector<double>& ordinates) {
  if (!(T > 0.0)) throw DomainError("S1 requires T > 0");
  double acc = 0.0;
  for (double g : ordinates)
    if (g <= T) acc += T - g;
  return acc - T - theta_integral(T) / std::numbers::pi;
}

double s1_of_T(double T) {
  if (!(T > 0.0)) throw DomainError("S1 requires T > 0");
  std::vector<double> gammas;
  if (T > kMinHeight) {
    check_not_near_zero(T);
    for (const auto& [a, b] : scan_sign_changes(kMinHeight, T).brackets) {
      const auto [lo, hi] = refine_zero(a, b, 1e-12);
      gammas.push_back(0.5 * (lo + hi));
    }
  }
  return s1_from_ordinates(T, gammas);
}

}  // namespace zgap::zeta
