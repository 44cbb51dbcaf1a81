#include <doctest.h>

#include <cmath>

#include "zgap/constants.hpp"
#include "zgap/numerics.hpp"

using namespace zgap;
using namespace zgap::constants;
using numerics::LogReal;
using numerics::RigorousBound;

namespace {

// Oracle values below come from an independent mpmath script at 60 digits.
bool near(const RigorousBound& b, double expected, double rel = 1e-13) {
  return std::abs(b.mid_double() - expected) <= rel * std::abs(expected) &&
         b.lo_double() <= expected * (1 + rel) && b.hi_double() >= expected * (1 - rel);
}

bool near_ln(const RigorousBound& b, double expected_ln, double tol = 1e-12) {
  return b.certainly_positive() && std::abs(b.lo.ln_double() - expected_ln) < tol &&
         std::abs(b.hi.ln_double() - expected_ln) < tol;
}

const ConstantReport& find(const std::vector<ConstantReport>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  FAIL("missing report " << name);
  return rs.front();
}

}  // namespace

TEST_CASE("base constants") {
  const RigorousBound x0 = standard_x0();
  CHECK(near(a1(), 14.33503757728862));
  CHECK(near(a2(x0), 7.332471408744358));
  CHECK(near(a3(x0), 69.40746788636334));
  CHECK(near(a4(x0, standard_eps(), 1), 1.034239567732548));
  CHECK(near(m0(), 1.315407443851608));
  CHECK(near(L0(), 642.86));
  CHECK(near(a0(), 1.5453));
  CHECK(standard_x0().lo.ln_double() == doctest::Approx(20000.0));
}

TEST_CASE("Rtilde terms") {
  const RigorousBound x0 = standard_x0(), eps = standard_eps(), L = standard_L();
  const Rtilde r = eval_Rtilde(eps, 1, x0, L);
  CHECK(near(r.r1, 11559.69813279603, 1e-12));
  CHECK(near(r.r2, 1924.602122453973, 1e-12));
  const RigorousBound s50 = eval_Rtilde(eps, 50, x0, L).sum();
  CHECK(s50.mid_double() == doctest::Approx(8.719e52).epsilon(1e-3));
  const RigorousBound s1000 = eval_Rtilde(eps, 1000, x0, L).sum();
  CHECK(s1000.lo.log10_abs() == doctest::Approx(std::log10(5.7772e-253)).epsilon(1e-5));
}

TEST_CASE("C and C prime") {
  // The correction in C' is about e^{-k/eps log x0}; 512 bits resolve a 1e-100 gap.
  numerics::ScopedPrecision p(512);
  const RigorousBound x0 = standard_x0(), eps = standard_eps();
  const RigorousBound c1 = eval_C(eps, 1, x0);
  const RigorousBound c2 = eval_C(eps, 2, x0);
  CHECK(near(c1, 144160595847.0826, 1e-13));
  CHECK(near(c2, 2.699260662651956e21, 1e-13));
  CHECK(near_ln(c1, 25.69419376403237693));
  // Published bounds for k = 1, 2.
  CHECK(c1.hi_double() < 1.45e11);
  CHECK(c2.hi_double() < 2.7e21);
  for (int k : {1, 2}) {
    const RigorousBound d = eval_C_prime(eps, k, x0) - eval_C(eps, k, x0);
    CHECK(compare(rb_abs(d).hi, LogReal::parse("1e-100")) < 0);
  }
}

TEST_CASE("C approaches its leading factor") {
  const RigorousBound x0 = standard_x0(), eps = standard_eps();
  // Sum of R is 5.8e-253 at k = 1000, so the ratio is 1 to double precision.
  const RigorousBound c = eval_C(eps, 1000, x0, standard_L());
  const RigorousBound lead = eval_C_hat_leading(eps, 1000, x0);
  CHECK(std::abs(c.lo.ln_double() - lead.lo.ln_double()) < 1e-12 * std::abs(lead.lo.ln_double()));
}

TEST_CASE("C1 and A") {
  const C1Result r1 = eval_C1(1), r2 = eval_C1(2);
  CHECK(near(r1.exact, 14.96501347664454));
  CHECK(near(r2.exact, 32.07358782970814));
  CHECK(compare(r1.exact.hi, r1.cheap_bound.lo) <= 0);
  CHECK(compare(r2.exact.hi, r2.cheap_bound.lo) <= 0);
  CHECK(near(eval_A(RigorousBound::decimal("0.7"), RigorousBound::integer(1)), 17.93475321099441));
}

TEST_CASE("moment error constants at the gate") {
  const auto reports = all_reports();
  CHECK(near(find(reports, "D1").computed, 2.095875353539422, 1e-12));
  CHECK(near(find(reports, "D2").computed, 1.358068558371160, 1e-12));
  CHECK(near(find(reports, "E2").computed, 576642383388.3304, 1e-12));
  CHECK(near(find(reports, "F2").computed, 4.318817060243130e22, 1e-12));
  CHECK(near(find(reports, "C3_gate").computed, 187177.4075691003, 1e-12));
}

TEST_CASE("M2 gate signs") {
  const GateResult pass = audit_M2_gate("30.76");
  const GateResult fail = audit_M2_gate("30.75");
  CHECK(pass.passes);
  CHECK(pass.margin.certainly_positive());
  CHECK(pass.margin.mid_double() == doctest::Approx(0.001877107039907688).epsilon(1e-10));
  CHECK_FALSE(fail.passes);
  CHECK(fail.margin.certainly_negative());
  CHECK(fail.margin.mid_double() == doctest::Approx(-0.003126004781309854).epsilon(1e-10));
  CHECK(audit_M2_gate(35.0).margin.mid_double() == doctest::Approx(0.8801936837035874).epsilon(1e-10));
  const MomentBoundsAtGate mb = derive_M2_M3("30.76");
  CHECK(near_ln(mb.M2, 22.19251673241928658, 1e-9));
  CHECK(near_ln(mb.M3, 58.86008954593150, 1e-9));
}

TEST_CASE("gap pipeline") {
  const MultiplicityConstants mc = eval_multiplicity_constants();
  CHECK(std::abs(mc.delta_root - 1.013943) < 5e-6);
  CHECK(mc.density_coefficient <= 1.014);
  CHECK(mc.delta.contains(LogReal::from_double(mc.delta_root)));
  CHECK(mc.kappa.hi_double() < 6.46e-7);
  CHECK(mc.kappa.lo_double() > 6.459e-7);

  const double lambda = solve_ideal_lambda();
  CHECK(lambda >= 1.1285);
  CHECK(lambda <= 1.1287);
  CHECK(std::abs(ideal_lambda_residual(lambda)) < 1e-10);
  CHECK(solve_ideal_lambda_literal_fish() == doctest::Approx(1.13297354755).epsilon(1e-10));

  const GapConstantsReport g = eval_gap_constants(1.0, 0.5);
  CHECK(g.M1.lo.ln_double() == doctest::Approx(4.3));
  const double log10_c0 = g.c0.lo.log10_abs();
  CHECK(log10_c0 > -9.94e12);
  CHECK(log10_c0 < -9.92e12);
}

TEST_CASE("report table") {
  const auto reports = all_reports();
  CHECK(reports.size() == report_names().size());
  CHECK(find(reports, "M2").status == Status::EXCEEDS);
  CHECK(find(reports, "C_k1").status == Status::WITHIN_PUBLISHED_BOUND);
  CHECK(find(reports, "omega0_dominates_C").status != Status::EXCEEDS);
  CHECK_FALSE(report_by_name("no_such_constant").has_value());
  const auto c0 = report_by_name("c0", 1.1286);
  REQUIRE(c0.has_value());
  CHECK(report_to_json_line(*c0).find("\"name\":\"c0\"") != std::string::npos);
  CHECK(std::string(to_string(Status::EXCEEDS)) == "EXCEEDS");
}
