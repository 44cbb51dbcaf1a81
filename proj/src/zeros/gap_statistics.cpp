#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zgap/constants.hpp"
#include "zgap/simd.hpp"
#include "zgap/zeros.hpp"
#include "zgap/zeta.hpp"

namespace zgap::zeros {

using namespace numerics;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_cover(const ZeroList& zl, double a, double b, const char* what) {
  if (a < zl.t_min || b > zl.t_max) throw OutOfRange(std::string(what) + ": zero list does not cover the window");
}

}  // namespace

GapStats gap_statistics(const ZeroList& zl, std::span<const double> alpha_grid) {
  if (zl.size() < 2) throw TooFewZeros("gap_statistics needs at least two ordinates");
  GapStats g;
  g.T = zl.t_max;
  g.gap_count = zl.size() - 1;
  g.gaps.reserve(g.gap_count);
  g.normalized_gaps.reserve(g.gap_count);
  simd::CompensatedSum raw, norm, norm_lg;
  for (std::size_t i = 0; i + 1 < zl.size(); ++i) {
    const double gn = zl.ordinates[i].gamma;
    const double gap = zl.ordinates[i + 1].gamma - gn;
    const double ng = gap * std::log(gn / kTwoPi) / kTwoPi;
    g.gaps.push_back(gap);
    g.normalized_gaps.push_back(ng);
    raw.add(gap);
    norm.add(ng);
    norm_lg.add(gap * std::log(gn) / kTwoPi);
    if (gap > g.max_gap) {
      g.max_gap = gap;
      g.max_gap_index = zl.index_of(i);
    }
    if (ng > g.max_normalized_gap) {
      g.max_normalized_gap = ng;
      g.max_normalized_index = zl.index_of(i);
    }
  }
  const double n = static_cast<double>(g.gap_count);
  g.mean_gap = raw.value() / n;
  g.mean_normalized_gap = norm.value() / n;
  g.mean_normalized_gap_log_gamma = norm_lg.value() / n;

  std::vector<double> sorted = g.gaps;
  std::sort(sorted.begin(), sorted.end());
  const double logT = std::log(g.T);
  for (double alpha : alpha_grid) {
    const double cut = kTwoPi * alpha / logT;
    const auto k = std::upper_bound(sorted.begin(), sorted.end(), cut) - sorted.begin();
    g.d_of_alpha[alpha] = alpha <= 0.0 ? 0.0 : static_cast<double>(k) / n;
  }
  return g;
}

double d_of_alpha_direct(const ZeroList& zl, double alpha) {
  if (zl.size() < 2) throw TooFewZeros("D(alpha, T) needs at least two ordinates");
  if (alpha <= 0.0) return 0.0;
  const double cut = kTwoPi * alpha / std::log(zl.t_max);
  long hits = 0;
  for (std::size_t i = 0; i + 1 < zl.size(); ++i)
    if (zl.ordinates[i + 1].gamma - zl.ordinates[i].gamma <= cut) ++hits;
  return static_cast<double>(hits) / static_cast<double>(zl.size() - 1);
}

double discrepancy_delta(double t, double lambda, double T, const ZeroList& zl) {
  if (!(T > 1.0)) throw DomainError("discrepancy_delta requires T > 1");
  const double w = kTwoPi * lambda / std::log(T);
  require_cover(zl, t, t + w, "discrepancy_delta");
  if (zl.count_in(t - zeta::kZeroExclusion, t + zeta::kZeroExclusion) > 0)
    throw TooCloseToZero("discrepancy_delta: t is within 1e-6 of an ordinate");
  return static_cast<double>(zl.count_in(t, t + w)) - lambda;
}

double zero_free_measure(double T, double lambda, const ZeroList& zl) {
  if (!(T > 1.0) || !(lambda >= 0.0)) throw DomainError("zero_free_measure requires T > 1, lambda >= 0");
  const double w = kTwoPi * lambda / std::log(T);
  require_cover(zl, T, 2.0 * T + w, "zero_free_measure");

  // Good t lie in [L, next - w) where L is T or an ordinate in (T, 2T] and
  // next is the first ordinate after L. Past t_max no ordinate can fall in
  // the window of any t <= 2T, so next is taken as +inf there.
  const auto& o = zl.ordinates;
  auto it = std::upper_bound(o.begin(), o.end(), T, [](double v, const Ordinate& x) { return v < x.gamma; });
  simd::CompensatedSum m;
  double left = T;
  while (left <= 2.0 * T) {
    const double next = it == o.end() ? std::numeric_limits<double>::infinity() : it->gamma;
    const double right = std::min(next - w, 2.0 * T);
    if (right > left) m.add(right - left);
    if (it == o.end()) break;
    left = it->gamma;
    ++it;
  }
  return m.value();
}

KorolevResult korolev_sum(double T, const ZeroList& zl, KorolevRange range) {
  if (!(T > 1.0)) throw DomainError("korolev_sum requires T > 1");
  const double a = range == KorolevRange::HALF_T_TO_T ? 0.5 * T : T;
  const double b = range == KorolevRange::HALF_T_TO_T ? T : 2.0 * T;
  require_cover(zl, a, b, "korolev_sum");

  KorolevResult r;
  simd::CompensatedSum s;
  const auto& o = zl.ordinates;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (o[i].gamma < a || o[i].gamma > b) continue;
    if (i + 1 >= o.size()) throw OutOfRange("korolev_sum: zero list ends before the gap after the last term");
    const double gap = o[i + 1].gamma - o[i].gamma;
    s.add(gap * gap);
    ++r.terms;
  }
  r.sum = s.value();

  const long N = zl.count_upto(b);
  const RigorousBound logb = rb_log(RigorousBound::from_double(b));
  const RigorousBound bound = constants::K() * RigorousBound::integer(N) / (logb * logb);
  r.bound = bound.lo;
  r.holds = compare(LogReal::from_double(r.sum, Dir::Up), r.bound) <= 0;
  return r;
}

double sigma_xt(double x, double t, std::span<const OffLineZero> zeros) {
  if (!(x >= 2.0)) throw DomainError("sigma_xt requires x >= 2");
  const double lx = std::log(x);
  double m = 1.0 / lx;
  for (const OffLineZero& z : zeros) {
    const double d = std::abs(z.beta - 0.5);
    if (std::abs(t - z.gamma) <= std::pow(x, 3.0 * d) / lx) m = std::max(m, d);
  }
  return 0.5 + 2.0 * m;
}

double sigma_xt(double x, double t, const ZeroList& zl) {
  if (!(x >= 2.0)) throw DomainError("sigma_xt requires x >= 2");
  const double reach = std::pow(x, 1.5) / std::log(x);
  require_cover(zl, t - reach, t + reach, "sigma_xt");
  std::vector<OffLineZero> window;
  for (const Ordinate& o : zl.ordinates)
    if (std::abs(o.gamma - t) <= reach) window.push_back({0.5, o.gamma});
  return sigma_xt(x, t, window);
}

}  // namespace zgap::zeros
