#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/factorials.hpp>

#include "zgap/moments.hpp"
#include "zgap/numerics.hpp"
#include "zgap/simd.hpp"
#include "zgap/zeta.hpp"
#include "gauss_rule.hpp"

namespace zgap::moments {

namespace {

constexpr double kPi = std::numbers::pi;

double smooth_increment(double t, double h) { return (zeta::rs_theta(t + h) - zeta::rs_theta(t)) / kPi; }

}  // namespace

double moment_main_term(int n, double T, double h) {
  if (n <= 0) throw DomainError("moment power must be positive");
  if (n % 2 != 0) return 0.0;
  const unsigned k = static_cast<unsigned>(n / 2);
  const double c = boost::math::factorial<double>(2 * k) /
                   (std::pow(2.0, k) * std::pow(kPi, 2.0 * k) * boost::math::factorial<double>(k));
  return c * T * std::pow(std::log(2.0 + h * std::log(T)), static_cast<double>(k));
}

double delta_S(double t, double h, const zeros::ZeroList& zl) {
  if (t < zl.t_min || t + h > zl.t_max) throw OutOfRange("delta_S: zero list does not cover [t, t+h]");
  return static_cast<double>(zl.count_in(t, t + h)) - smooth_increment(t, h);
}

double s_from_zeros(double t, const zeros::ZeroList& zl) {
  if (zl.count_in(t - zeta::kZeroExclusion, t + zeta::kZeroExclusion) > 0)
    throw TooCloseToZero("S(t): t is within 1e-6 of an ordinate");
  return static_cast<double>(zl.count_upto(t)) - zeta::theta_exact(t) / kPi - 1.0;
}

std::vector<MomentEstimate> moment_J(std::span<const int> powers, double T, double h, const zeros::ZeroList& zl,
                                     int quad_points) {
  if (!(T >= zeta::kMinHeight)) throw DomainError("moment_J requires T >= 10");
  if (!(h >= 0.0) || h > 1.0) throw DomainError("moment_J requires 0 <= h <= 1");
  if (T < zl.t_min || 2.0 * T + h > zl.t_max) throw OutOfRange("moment_J: zero list does not cover [T, 2T+h]");

  std::vector<MomentEstimate> out;
  for (int n : powers) {
    MomentEstimate m;
    m.n = n;
    m.T = T;
    m.h = h;
    m.main_term = moment_main_term(n, T, h);
    out.push_back(m);
  }
  if (h == 0.0) {
    for (auto& m : out) m.ratio = m.main_term > 0.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    return out;
  }

  const double a = T, b = 2.0 * T;
  std::vector<double> cuts{a, b};
  for (const auto& o : zl.ordinates) {
    if (o.gamma > a && o.gamma < b) cuts.push_back(o.gamma);
    if (o.gamma - h > a && o.gamma - h < b) cuts.push_back(o.gamma - h);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const auto& r15 = detail::gauss_nodes(quad_points);
  const auto& r7 = detail::gauss_rule<7>();
  std::vector<simd::CompensatedSum> v15(out.size()), err(out.size());
  long pieces = 0;

  auto integrate_piece = [&](double lo, double hi, double count) {
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    std::vector<double> s15(out.size(), 0.0), s7(out.size(), 0.0);
    for (std::size_t i = 0; i < r15.x.size(); ++i) {
      const double f = std::abs(count - smooth_increment(mid + half * r15.x[i], h));
      for (std::size_t j = 0; j < out.size(); ++j) s15[j] += r15.w[i] * std::pow(f, out[j].n);
    }
    for (std::size_t i = 0; i < r7.x.size(); ++i) {
      const double f = std::abs(count - smooth_increment(mid + half * r7.x[i], h));
      for (std::size_t j = 0; j < out.size(); ++j) s7[j] += r7.w[i] * std::pow(f, out[j].n);
    }
    for (std::size_t j = 0; j < out.size(); ++j) {
      v15[j].add(half * s15[j]);
      err[j].add(std::abs(half * (s15[j] - s7[j])));
    }
    ++pieces;
  };

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    const double count = static_cast<double>(zl.count_in(0.5 * (lo + hi), 0.5 * (lo + hi) + h));
    // theta(t+h) - theta(t) is increasing in t, so |.| has at most one kink per piece.
    auto g = [&](double t) { return count - smooth_increment(t, h); };
    const double glo = g(lo), ghi = g(hi);
    if (glo > 0.0 && ghi < 0.0) {
      const double r = numerics::find_root(g, lo, hi, numerics::kRootTolerance);
      integrate_piece(lo, r, count);
      integrate_piece(r, hi, count);
    } else {
      integrate_piece(lo, hi, count);
    }
  }

  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j].value = v15[j].value();
    out[j].quad_error = err[j].value();
    out[j].pieces = pieces;
    out[j].ratio = out[j].main_term > 0.0 ? out[j].value / out[j].main_term : std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

MomentEstimate moment_J(int n, double T, double h, const zeros::ZeroList& zl, int quad_points) {
  const int p[1] = {n};
  return moment_J(std::span<const int>(p, 1), T, h, zl, quad_points).front();
}

BandReport thm41_bandcheck(double T, double h, double eps, double alpha, const zeros::ZeroList& zl,
                           const primes::PrimeTable& table, int quad_points) {
  if (!(alpha >= 1.0)) throw DomainError("thm41_bandcheck requires alpha >= 1");
  if (!(eps > 0.0) || eps > 1.0) throw DomainError("thm41_bandcheck requires 0 < eps <= 1");
  BandReport r;
  r.T = T;
  r.h = h;
  r.alpha = alpha;
  r.eps = eps;
  const int powers[3] = {1, 2, 4};
  const auto js = moment_J(powers, T, h, zl, quad_points);
  r.J1 = js[0];
  r.J2 = js[1];
  r.J4 = js[2];
  const double l = std::log(alpha + h * std::log(T));
  r.main2 = T / (kPi * kPi) * l;
  r.main4 = 3.0 * T / std::pow(kPi, 4) * l * l;
  r.dev2 = r.J2.value - r.main2;
  r.dev4 = r.J4.value - r.main4;
  r.ratio2 = r.J2.ratio;
  r.ratio4 = r.J4.ratio;
  r.prime_prediction2 = T / (kPi * kPi) * primes::prime_cos_sum(std::pow(T, eps), h, table);
  r.holder_lhs = r.J1.value;
  r.holder_rhs = r.J4.value > 0.0 ? std::sqrt(std::pow(r.J2.value, 3) / r.J4.value) : 0.0;
  r.holder_holds = r.holder_lhs >= r.holder_rhs;
  return r;
}

}  // namespace zgap::moments
