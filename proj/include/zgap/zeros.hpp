#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "zgap/errors.hpp"
#include "zgap/numerics.hpp"

namespace zgap::zeros {

using numerics::LogReal;

inline constexpr double kDefaultRadius = 1e-9;

struct Ordinate {
  double gamma = 0.0;
  double radius = 0.0;  // |true ordinate - gamma| <= radius
};

struct ZeroList {
  double t_min = 0.0;
  double t_max = 0.0;
  long count_below = 0;  // N(t_min); ordinates[i] is gamma_{count_below + i + 1}
  std::vector<Ordinate> ordinates;
  bool count_certified = false;

  std::size_t size() const { return ordinates.size(); }
  long index_of(std::size_t i) const { return count_below + static_cast<long>(i) + 1; }
  // Number of ordinates in (a, b].
  long count_in(double a, double b) const;
  // N(t) for t in [t_min, t_max].
  long count_upto(double t) const;
};

// Brackets every sign change of Z on [t_min, t_max] and bisects to radius.
// The count is checked against count_N at both ends; one finer rescan is
// attempted before CountMismatch.
ZeroList isolate_zeros(double t_min, double t_max, double radius = kDefaultRadius);

// The ordinates in (a, b] as a list over [a, b]; requires [a, b] inside zl.
ZeroList restrict(const ZeroList& zl, double a, double b);

// CSV: '#' metadata line, then "index,gamma,radius".
void write_csv(const ZeroList& zl, std::ostream& out);
ZeroList read_csv(std::istream& in);

struct GapStats {
  double T = 0.0;  // zl.t_max; D(alpha, T) uses 2 pi alpha / log T
  std::size_t gap_count = 0;
  double mean_gap = 0.0;
  double max_gap = 0.0;
  long max_gap_index = 0;  // n with max gap gamma_{n+1} - gamma_n
  double mean_normalized_gap = 0.0;
  double max_normalized_gap = 0.0;
  long max_normalized_index = 0;
  // Same mean with the asymptotic scale log(gamma_n) in place of
  // log(gamma_n / 2pi); about 1.34 at height 1500.
  double mean_normalized_gap_log_gamma = 0.0;
  std::vector<double> gaps;
  std::vector<double> normalized_gaps;  // gap * log(gamma_n / 2pi) / 2pi
  // Fraction of the listed gaps with gap <= 2 pi alpha / log T. The gap after
  // the last listed ordinate is unknown, so the denominator is gap_count.
  std::map<double, double> d_of_alpha;
};

GapStats gap_statistics(const ZeroList& zl, std::span<const double> alpha_grid);
// Direct count of the defining set, independent of gap_statistics.
double d_of_alpha_direct(const ZeroList& zl, double alpha);

// N(t + 2 pi lambda / log T) - N(t) - lambda, window (t, t + 2 pi lambda / log T].
double discrepancy_delta(double t, double lambda, double T, const ZeroList& zl);

// Measure of {t in [T, 2T] : no ordinate in (t, t + 2 pi lambda / log T]}.
double zero_free_measure(double T, double lambda, const ZeroList& zl);

struct KorolevResult {
  double sum = 0.0;
  LogReal bound;  // K N(T) / log^2 T, rounded down
  bool holds = false;
  long terms = 0;
};

enum class KorolevRange { HALF_T_TO_T, T_TO_2T };

// Sum of (gamma_{n+1} - gamma_n)^2 over T/2 <= gamma_n <= T (or T <= gamma_n <= 2T).
KorolevResult korolev_sum(double T, const ZeroList& zl, KorolevRange range = KorolevRange::HALF_T_TO_T);

struct OffLineZero {
  double beta = 0.5;
  double gamma = 0.0;
};

// 1/2 + 2 max{|beta - 1/2|, 1/log x} over zeros with |t - gamma| <= x^{3|beta-1/2|}/log x.
double sigma_xt(double x, double t, const ZeroList& zl);
double sigma_xt(double x, double t, std::span<const OffLineZero> zeros);

}  // namespace zgap::zeros
