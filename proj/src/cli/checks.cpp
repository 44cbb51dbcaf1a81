#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "zgap/cli.hpp"
#include "zgap/constants.hpp"
#include "zgap/moments.hpp"
#include "zgap/numerics.hpp"
#include "zgap/primes.hpp"
#include "zgap/zeta.hpp"

namespace zgap::cli::checks {

namespace {

using constants::Status;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// mpmath zetazero(1), zetazero(2)
constexpr double kGamma1 = 14.134725141734693790;
constexpr double kGamma2 = 21.022039638771554993;

Check status_check(const std::string& report) {
  const auto r = constants::report_by_name(report);
  Check c;
  c.name = report;
  c.passed = r && r->status == Status::WITHIN_PUBLISHED_BOUND;
  if (r) {
    c.detail["status"] = constants::to_string(r->status);
    c.detail["computed_lo_ln"] = r->computed.lo.ln_double();
    c.detail["computed_hi_ln"] = r->computed.hi.ln_double();
  }
  return c;
}

Check make(std::string name, bool passed, Json detail = Json::object()) {
  Check c;
  c.name = std::move(name);
  c.passed = passed;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

std::vector<Check> constant_bounds() {
  return {status_check("C_k1"), status_check("C_k2"), status_check("omega0_dominates_C")};
}

std::vector<Check> m2_gate() {
  const auto pass = constants::audit_M2_gate("30.76");
  const auto fail = constants::audit_M2_gate("30.75");
  return {
      make("gate_30.76_passes", pass.passes && pass.margin.certainly_positive(),
           {{"margin_lo", pass.margin.lo_double()}, {"margin_hi", pass.margin.hi_double()}}),
      make("gate_30.75_fails", !fail.passes && fail.margin.certainly_negative(),
           {{"margin_lo", fail.margin.lo_double()}, {"margin_hi", fail.margin.hi_double()}}),
  };
}

std::vector<Check> gap_pipeline() {
  std::vector<Check> out;
  out.push_back(status_check("M1"));

  const auto g = constants::eval_gap_constants(1.0, 0.5);
  const double c0_lo = g.c0.lo.log10_abs(), c0_hi = g.c0.hi.log10_abs();
  out.push_back(make("log10_c0_range", g.c0.certainly_positive() && c0_lo > -9.94e12 && c0_hi < -9.92e12,
                     {{"log10_lo", c0_lo}, {"log10_hi", c0_hi}}));

  const auto m = constants::eval_multiplicity_constants();
  const double k_lo = m.kappa.lo_double(), k_hi = m.kappa.hi_double();
  out.push_back(make("kappa_range", k_lo > 6.459e-7 && k_hi < 6.46e-7, {{"lo", k_lo}, {"hi", k_hi}}));
  const double d_lo = m.delta.lo_double(), d_hi = m.delta.hi_double();
  out.push_back(make("delta_root", d_lo >= 1.013943 - 5e-6 && d_hi <= 1.013943 + 5e-6,
                     {{"lo", d_lo}, {"hi", d_hi}, {"root", m.delta_root}}));
  out.push_back(status_check("density_coefficient_thm14"));

  // Reported alongside: the published M2 is not reproduced (see README).
  Check m2 = status_check("M2");
  m2.informational = true;
  out.push_back(m2);
  return out;
}

std::vector<Check> ideal_lambda() {
  const double l = constants::solve_ideal_lambda();
  return {make("ideal_lambda_range", l >= 1.1285 && l <= 1.1287,
               {{"lambda", l}, {"literal_fish", constants::solve_ideal_lambda_literal_fish()}})};
}

std::vector<Check> zeta_counts(const zeros::ZeroList& zl) {
  std::vector<Check> out;
  const auto n = zeta::count_N(1000.0);
  out.push_back(make("count_N_1000", n.count == 649 && n.certified,
                     {{"count", n.count}, {"certified", n.certified}, {"implied_S", n.implied_S}}));
  const long listed = zl.count_upto(1000.0);
  out.push_back(make("sign_change_list_1000", listed == 649, {{"count", listed}}));

  double worst = 0.0;
  long samples = 0;
  for (double t = 10.5; t <= 1000.0; t += 0.5) {
    if (zl.count_in(t - zeta::kZeroExclusion, t + zeta::kZeroExclusion) > 0) continue;
    worst = std::max(worst, std::abs(zeta::s_from_count(t, zl.count_upto(t)).s_value));
    ++samples;
  }
  out.push_back(make("implied_S_below_1.1", worst < 1.1, {{"max_abs_S", worst}, {"samples", samples}}));

  const double g1 = zl.size() > 0 ? zl.ordinates[0].gamma : 0.0;
  const double g2 = zl.size() > 1 ? zl.ordinates[1].gamma : 0.0;
  out.push_back(make("gamma1", g1 > 14.13 && g1 < 14.14 && std::abs(g1 - kGamma1) < 1e-6, {{"gamma", g1}}));
  out.push_back(make("gamma2", g2 > 21.02 && g2 < 21.03 && std::abs(g2 - kGamma2) < 1e-6, {{"gamma", g2}}));
  return out;
}

std::vector<Check> gap_statistics(const zeros::ZeroList& from10, const zeros::ZeroList& mid, SuiteRng& rng) {
  std::vector<Check> out;
  std::vector<double> alphas;
  for (int i = 0; i <= 80; ++i) alphas.push_back(0.05 * i);

  const auto gm = zeros::gap_statistics(mid, alphas);
  out.push_back(make("mean_normalized_gap", gm.mean_normalized_gap >= 0.95 && gm.mean_normalized_gap <= 1.05,
                     {{"t_min", mid.t_min},
                      {"t_max", mid.t_max},
                      {"mean", gm.mean_normalized_gap},
                      {"mean_log_gamma_scale", gm.mean_normalized_gap_log_gamma}}));

  bool mono = true;
  double prev = 0.0;
  for (const auto& [a, d] : gm.d_of_alpha) {
    if (d < prev || d < 0.0 || d > 1.0) mono = false;
    prev = d;
  }
  out.push_back(make("D_nondecreasing", mono && gm.d_of_alpha.at(0.0) == 0.0, {{"D_at_4", gm.d_of_alpha.at(alphas.back())}}));

  bool direct = true;
  Json samples = Json::array();
  for (int i = 0; i < 5; ++i) {
    const double a = rng.uniform(0.0, 3.0);
    const double d1 = zeros::gap_statistics(mid, std::vector<double>{a}).d_of_alpha.at(a);
    const double d2 = zeros::d_of_alpha_direct(mid, a);
    direct = direct && d1 == d2;
    samples.push_back({{"alpha", a}, {"D", d1}});
  }
  out.push_back(make("D_direct_count", direct, {{"samples", samples}}));

  const auto gf = zeros::gap_statistics(from10, std::vector<double>{});
  out.push_back(make("max_gap_is_first", gf.max_gap_index == 1,
                     {{"t_max", from10.t_max}, {"max_gap", gf.max_gap}, {"index", gf.max_gap_index}}));

  double tele = 0.0;
  for (double g : gm.gaps) tele += g;
  const double span = mid.ordinates.back().gamma - mid.ordinates.front().gamma;
  out.push_back(make("telescoping", std::abs(tele - span) < 1e-9, {{"sum", tele}, {"span", span}}));
  return out;
}

std::vector<Check> moment_bands(const zeros::ZeroList& zl, double T, int quad_points) {
  const double h = kTwoPi / std::log(T);
  const int powers[3] = {1, 2, 4};
  const auto js = moments::moment_J(powers, T, h, zl, quad_points);
  const double holder_rhs = std::sqrt(std::pow(js[1].value, 3) / js[2].value);
  const std::string tag = "T=" + std::to_string(static_cast<long>(T));
  return {
      make("J2_ratio " + tag, js[1].ratio >= 0.3 && js[1].ratio <= 3.0,
           {{"J2", js[1].value}, {"main", js[1].main_term}, {"ratio", js[1].ratio}, {"quad_error", js[1].quad_error}}),
      make("J4_ratio " + tag, js[2].ratio >= 0.2 && js[2].ratio <= 5.0,
           {{"J4", js[2].value}, {"main", js[2].main_term}, {"ratio", js[2].ratio}, {"quad_error", js[2].quad_error}}),
      make("holder_chain " + tag, js[0].value >= holder_rhs, {{"J1", js[0].value}, {"sqrt_J2^3_over_J4", holder_rhs}}),
  };
}

std::vector<Check> holder(const zeros::ZeroList& zl, double T, SuiteRng& rng, int quad_points) {
  std::vector<Check> out;
  std::vector<double> hs{kTwoPi / std::log(T)};
  for (int i = 0; i < 3; ++i) hs.push_back(rng.uniform(0.05, 1.0));
  const int powers[3] = {1, 2, 4};
  for (double h : hs) {
    const auto js = moments::moment_J(powers, T, h, zl, quad_points);
    const double rhs = std::sqrt(std::pow(js[1].value, 3) / js[2].value);
    out.push_back(make("holder_chain", js[0].value >= rhs && js[0].value >= 0.0,
                       {{"T", T}, {"h", h}, {"J1", js[0].value}, {"J2", js[1].value}, {"J4", js[2].value},
                        {"sqrt_J2^3_over_J4", rhs}}));
  }

  const auto zero = moments::moment_J(powers, T, 0.0, zl, quad_points);
  out.push_back(make("h_zero", zero[0].value == 0.0 && zero[1].value == 0.0 && zero[2].value == 0.0));

  // Midpoint sum of the same integrand; each cell holding a breakpoint can
  // be off by at most cell * max|integrand|.
  const double h = hs.front();
  const long cells = 200000;
  const double cell = T / static_cast<double>(cells);
  double naive = 0.0, fmax = 0.0;
  for (long i = 0; i < cells; ++i) {
    const double d = moments::delta_S(T + cell * (static_cast<double>(i) + 0.5), h, zl);
    naive += d * d;
    fmax = std::max(fmax, d * d);
  }
  naive *= cell;
  const double j2 = moments::moment_J(2, T, h, zl, quad_points).value;
  const double breaks = 2.0 * static_cast<double>(zl.count_in(T, 2.0 * T + h));
  const double tol = breaks * cell * fmax;
  out.push_back(make("naive_grid_J2", std::abs(naive - j2) <= tol, {{"J2", j2}, {"grid", naive}, {"tolerance", tol}}));
  return out;
}

std::vector<Check> mvh(long trials, SuiteRng& rng) {
  long fails = 0, quad_fails = 0;
  double worst = 0.0, worst_quad = 0.0;
  const double lengths[3] = {1.0, 10.0, 100.0};
  for (long i = 0; i < trials; ++i) {
    moments::DirichletPoly a, b;
    a.cutoff = b.cutoff = 2 + static_cast<long>(rng.index(49));
    for (long n = 1; n <= a.cutoff; ++n) a.coefficients[n] = {rng.normal(), rng.normal()};
    if (i % 2 == 0) {
      b = a;
    } else {
      for (long n = 1; n <= b.cutoff; ++n) b.coefficients[n] = {rng.normal(), rng.normal()};
    }
    const double T1 = rng.uniform(-1000.0, 1000.0);
    const double T2 = T1 + lengths[rng.index(3)];
    const auto r = moments::mvh_check(a, b, T1, T2);
    if (!r.holds) ++fails;
    const double qd = std::abs(r.lhs_dev - r.quad_dev) / (1.0 + r.rhs);
    if (qd > 1e-8) ++quad_fails;
    worst = std::max(worst, r.lhs_dev / r.rhs);
    worst_quad = std::max(worst_quad, qd);
  }

  moments::DirichletPoly one;
  one.cutoff = 2;
  one.coefficients[1] = {0.7, -1.3};
  const auto single = moments::mvh_check(one, one, 3.0, 17.0);

  moments::DirichletPoly a, a2;
  a.cutoff = a2.cutoff = 20;
  for (long n = 1; n <= 20; ++n) {
    a.coefficients[n] = {rng.normal(), rng.normal()};
    a2.coefficients[n] = a.coefficients[n] * std::complex<double>(2.0, -1.0);
  }
  const auto r1 = moments::mvh_check(a, a, 0.0, 10.0), r5 = moments::mvh_check(a2, a2, 0.0, 10.0);
  const bool scales = std::abs(r5.lhs_dev - 5.0 * r1.lhs_dev) <= 1e-9 * (1.0 + r5.lhs_dev) &&
                      std::abs(r5.rhs - 5.0 * r1.rhs) <= 1e-12 * r5.rhs;

  return {
      make("mvh_trials", fails == 0, {{"trials", trials}, {"failures", fails}, {"max_dev_over_rhs", worst}}),
      make("mvh_quadrature_agreement", quad_fails == 0, {{"failures", quad_fails}, {"max_rel_diff", worst_quad}}),
      make("mvh_single_term", single.lhs_dev == 0.0, {{"lhs_dev", single.lhs_dev}}),
      make("mvh_bilinear_scaling", scales, {{"lhs_dev", r1.lhs_dev}, {"lhs_dev_scaled", r5.lhs_dev}}),
  };
}

std::vector<Check> imag_moment(long trials, SuiteRng& rng) {
  static const long kPrimes[12] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const double lengths[3] = {1.0, 10.0, 100.0};
  long fails = 0, quad_fails = 0;
  double worst = 0.0, worst_quad = 0.0;
  for (long i = 0; i < trials; ++i) {
    const int k = 1 + static_cast<int>(rng.index(3));
    const std::size_t s = 1 + rng.index(12);
    std::vector<long> pool(std::begin(kPrimes), std::end(kPrimes));
    std::map<long, std::complex<double>> coeffs;
    for (std::size_t j = 0; j < s; ++j) {
      const std::size_t pick = j + rng.index(pool.size() - j);
      std::swap(pool[j], pool[pick]);
      coeffs[pool[j]] = {rng.normal(), rng.normal()};
    }
    const double T1 = rng.uniform(0.0, 1000.0);
    const double T2 = T1 + lengths[rng.index(3)];
    const auto r = moments::imag_moment_check(k, coeffs, T1, T2);
    if (!r.holds) ++fails;
    worst = std::max(worst, std::abs(r.lhs - r.main) / r.error_bound);

    if (i < 50) {
      // Independent oracle: Gauss-Legendre on the integrand itself.
      const long panels = static_cast<long>(std::ceil((T2 - T1) * 2.0 * k * std::log(37.0) / 4.0)) + 1;
      const double half = 0.5 * (T2 - T1) / static_cast<double>(panels);
      static const double x[5] = {0.0, 0.5384693101056831, -0.5384693101056831, 0.9061798459386640,
                                  -0.9061798459386640};
      static const double w[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                  0.2369268850561891, 0.2369268850561891};
      double q = 0.0;
      for (long p = 0; p < panels; ++p) {
        const double mid = T1 + half * (2.0 * static_cast<double>(p) + 1.0);
        for (int j = 0; j < 5; ++j) {
          const double t = mid + half * x[j];
          double im = 0.0;
          for (const auto& [pr, a] : coeffs) im += (a * std::polar(1.0, -t * std::log(static_cast<double>(pr)))).imag();
          q += half * w[j] * std::pow(im, 2 * k);
        }
      }
      const double diff = std::abs(q - r.lhs) / (1.0 + std::abs(r.lhs));
      worst_quad = std::max(worst_quad, diff);
      if (diff > 1e-7) ++quad_fails;
    }
  }

  std::map<long, std::complex<double>> one{{2, 1.0}};
  const double L = kTwoPi / std::log(2.0);
  const auto single = moments::imag_moment_check(1, one, 0.0, L);
  const std::map<long, std::complex<double>> two{{2, 1.0}, {3, 1.0}};
  const double ts = moments::tuple_sum(2, two);

  return {
      make("imag_moment_trials", fails == 0, {{"trials", trials}, {"failures", fails}, {"max_dev_over_bound", worst}}),
      make("imag_moment_quadrature_oracle", quad_fails == 0, {{"failures", quad_fails}, {"max_rel_diff", worst_quad}}),
      make("imag_moment_single_prime", std::abs(single.lhs - L / 2.0) < 1e-12 && std::abs(single.main - L / 2.0) < 1e-12,
           {{"lhs", single.lhs}, {"main", single.main}}),
      make("tuple_sum_two_primes", ts == 6.0, {{"value", ts}}),
  };
}

std::vector<Check> primesum(std::uint64_t sieve_limit) {
  std::vector<Check> out;
  const double Xmax = 1e7;
  if (static_cast<double>(sieve_limit) < Xmax) throw TableTooSmall("primesum suite needs sieve_limit >= 1e7");
  const primes::PrimeTable table = primes::sieve(static_cast<std::uint64_t>(Xmax));

  for (double X : {1e3, 1e4, 1e5, 1e6, 1e7}) {
    const double lX = std::log(X);
    const double slack = 3.0 / (lX * lX);
    double worst_upper = -1e300, worst_lower = -1e300;
    long points = 0;
    for (int j = 0; j < 20; ++j) {
      const double h = std::log(2.0) / lX + j / 20.0;
      if (h > 1.0) break;
      const double s = primes::prime_cos_sum(X, h, table);
      worst_upper = std::max(worst_upper, std::abs(std::log(h * lX) - s) - (13.88 + slack));
      ++points;
    }
    for (int j = 0; j <= 20; ++j) {
      const double h = (j / 20.0) * std::log(2.0) / lX;
      worst_lower = std::max(worst_lower, primes::prime_cos_sum(X, h, table) - (2.02 + slack));
    }
    out.push_back(make("prime_cos_sum_X=" + std::to_string(static_cast<long>(X)), worst_upper <= 0.0 && worst_lower <= 0.0,
                       {{"X", X}, {"grid_points", points}, {"max_excess_large_h", worst_upper},
                        {"max_excess_small_h", worst_lower}}));
  }

  const double cin = numerics::cin(std::log(2.0));
  out.push_back(make("cin_log2", cin < 0.118, {{"value", cin}}));

  // The sum only grows at primes, so checking at every prime covers all X <= 1e7.
  double s = 0.0, worst = -1e300;
  for (std::uint32_t p : table.primes) {
    const double lp = std::log(static_cast<double>(p));
    s += lp / p;
    worst = std::max(worst, s - lp);
  }
  const double at_max = primes::weighted_logp_sum(Xmax, table);
  out.push_back(make("logp_over_p_sum", worst <= 0.0,
                     {{"max_excess_over_primes", worst}, {"margin_at_1e7", std::log(Xmax) - at_max}}));
  return out;
}

}  // namespace zgap::cli::checks
