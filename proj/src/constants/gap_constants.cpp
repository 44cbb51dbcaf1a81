#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "zgap/constants.hpp"

namespace zgap::constants {

using numerics::rb_exp;
using numerics::rb_log;
using numerics::rb_sqrt;

namespace {

RigorousBound I(long long n) { return RigorousBound::integer(n); }

bool intersects(const RigorousBound& a, const RigorousBound& b) {
  return compare(a.lo, b.hi) <= 0 && compare(b.lo, a.hi) <= 0;
}

}  // namespace

GapConstantsReport eval_gap_constants(const RigorousBound& lambda_minus_one, double mu, const RigorousBound& slack) {
  if (lambda_minus_one.certainly_negative() || compare(lambda_minus_one.lo, I(1).hi) > 0) {
    throw DomainError("lambda must lie in [1, 2]");
  }
  if (!(mu > 0.0 && mu < 1.0)) throw DomainError("mu must lie in (0, 1)");
  const RigorousBound pi = RigorousBound::pi();
  const RigorousBound big = exp_decimal("30.76");  // log(2 pi M)
  const RigorousBound mu_b = RigorousBound::from_double(mu);
  const RigorousBound lambda = I(1) + lambda_minus_one;

  GapConstantsReport r;
  r.lambda_minus_one = lambda_minus_one;
  r.mu = mu;
  r.M = rb_exp(big) / (I(2) * pi);
  r.M1 = exp_decimal("4.3");
  r.M2 = exp_decimal("22.49");
  r.M3 = exp_decimal("58.87");
  r.M1_from_holder = rb_sqrt(r.M2 * r.M2 * r.M2 / r.M3);
  r.c0 = pi * exp_decimal("4.3") / rb_exp(big);

  // Theorem form, with 1 - lambda kept separate so lambda near 1 + c0 keeps
  // its digits.
  RigorousBound inner = r.c0 - lambda_minus_one;
  r.c1 = inner * inner / (I(16) * exp_decimal("99.8")) - slack;
  // Korolev-sum form: pi^2/(2K) (M1/(2M) + 1 - lambda)^2.
  RigorousBound horn = r.M1 / (I(2) * r.M) - lambda_minus_one;
  r.c1_horn = pi * pi / (I(2) * K()) * horn * horn - slack;
  r.c1_forms_agree = intersects(r.c1, r.c1_horn);

  r.c2 = ((I(1) - I(2) * r.c1) * mu_b + I(2) * lambda * r.c1 - I(1)) / (I(2) * mu_b);
  return r;
}

GapConstantsReport eval_gap_constants(double lambda, double mu) {
  if (!(lambda >= 1.0 && lambda <= 2.0)) throw DomainError("lambda must lie in [1, 2]");
  // lambda - 1 is exact in binary for lambda in [1, 2].
  return eval_gap_constants(RigorousBound::from_double(lambda - 1.0), mu, I(0));
}

MultiplicityConstants eval_multiplicity_constants() {
  MultiplicityConstants r;
  const RigorousBound e = rb_exp(I(1));
  r.kappa = I(2) / (I(3) * e * omega0());
  const RigorousBound rhs = rb_exp(I(5)) * I(2) * r.kappa;
  const double rhs_d = rhs.mid_double();
  auto f = [rhs_d](double d) { return (d - 1.0) * (d - 1.0) / d - rhs_d; };
  r.delta_root = numerics::find_root(f, 1.001, 1.1);

  // Certify the bracket with the enclosure arithmetic.
  auto f_rig = [&rhs](double d) {
    RigorousBound db = RigorousBound::from_double(d);
    RigorousBound dm = db - I(1);
    return dm * dm / db - rhs;
  };
  const double w = 1e-10;
  RigorousBound flo = f_rig(r.delta_root - w), fhi = f_rig(r.delta_root + w);
  r.delta = RigorousBound::hull(LogReal::from_double(r.delta_root - w), LogReal::from_double(r.delta_root + w));
  r.delta.rounding_certified = flo.certainly_negative() && fhi.certainly_positive();

  r.density_coefficient = std::ceil(r.delta_root * 1e5) / 1e5;
  r.kappa_exceeds_published = r.kappa.certainly_above(LogReal::parse("6.459e-7", numerics::Dir::Up));
  r.coefficient_within_thm = r.density_coefficient <= 1.014 && r.delta.rounding_certified &&
                             compare(r.delta.hi, LogReal::parse("1.01395", numerics::Dir::Down)) <= 0;
  return r;
}

double ideal_lambda_M1(double lambda) {
  const double pi = boost::math::constants::pi<double>();
  return std::sqrt(std::log(2.0 * pi * lambda) / (3.0 * pi * pi));
}

double ideal_lambda_residual(double lambda) { return lambda - 1.0 - 0.5 * ideal_lambda_M1(lambda); }

double solve_ideal_lambda() { return numerics::find_root(ideal_lambda_residual, 1.0, 2.0); }

double solve_ideal_lambda_literal_fish() {
  const double pi = boost::math::constants::pi<double>();
  auto f = [pi](double l) { return l - 1.0 - 0.5 * std::sqrt(std::log1p(2.0 * pi * l) / (3.0 * pi * pi)); };
  return numerics::find_root(f, 1.0, 2.0);
}

}  // namespace zgap::constants
