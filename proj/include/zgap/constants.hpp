#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zgap/numerics.hpp"

namespace zgap::constants {

using numerics::LogReal;
using numerics::RigorousBound;

// p/q as an enclosure.
RigorousBound rational(long long p, long long q);
// e^v for a decimal literal v.
RigorousBound exp_decimal(const std::string& v);

// Standard parameter set of the explicit-constant pipeline.
RigorousBound standard_eps();  // 1/88
RigorousBound standard_x0();   // e^(2*10^4)
RigorousBound standard_L();    // 642.86
RigorousBound ln_T0();         // ln((1/2) e^1408)

struct BaseConstants {
  RigorousBound a0, a1, a2, a3, a4, m0, L0, K, omega0;
};

RigorousBound a0();
RigorousBound a1();
RigorousBound a2(const RigorousBound& x0);
RigorousBound a3(const RigorousBound& x0);
RigorousBound a4(const RigorousBound& x0, const RigorousBound& eps, int k);
RigorousBound m0();
RigorousBound L0();
RigorousBound K();
RigorousBound omega0();
BaseConstants base_constants(const RigorousBound& x0, const RigorousBound& eps, int k);

struct Rtilde {
  RigorousBound r1, r2, r3, r4;
  RigorousBound sum() const { return r1 + r2 + r3 + r4; }
};

Rtilde eval_Rtilde(const RigorousBound& eps, int k, const RigorousBound& x0, const RigorousBound& L);
RigorousBound eval_C_hat(const RigorousBound& eps1, const RigorousBound& eps2, int k, const RigorousBound& x0,
                         const RigorousBound& L);
// The factor (1/6)(12 a2 a4 k / eps2)^(2k) that Ĉ approaches as k grows.
RigorousBound eval_C_hat_leading(const RigorousBound& eps2, int k, const RigorousBound& x0);
RigorousBound eval_C(const RigorousBound& eps, int k, const RigorousBound& x0, const RigorousBound& L);
RigorousBound eval_C_prime(const RigorousBound& eps, int k, const RigorousBound& x0, const RigorousBound& L);
inline RigorousBound eval_C(const RigorousBound& eps, int k, const RigorousBound& x0) {
  return eval_C(eps, k, x0, standard_L());
}
inline RigorousBound eval_C_prime(const RigorousBound& eps, int k, const RigorousBound& x0) {
  return eval_C_prime(eps, k, x0, standard_L());
}

// 𝒞(x, T, ξ, ν); x and T are passed as enclosures so T may be astronomical.
RigorousBound eval_calC(const RigorousBound& x, const RigorousBound& T, const RigorousBound& xi, int nu,
                        const RigorousBound& L);

struct C1Result {
  RigorousBound exact;
  RigorousBound cheap_bound;  // 6 pi m0 k^k
};
C1Result eval_C1(int k);

// A(a, X) with X given through log X.
RigorousBound eval_A(const RigorousBound& a, const RigorousBound& log_X);

struct MomentErrorConstants {
  RigorousBound y;  // log(alpha + h log T)
  RigorousBound D1, D2, E1, E2, F1, F2, C2, C3;
};

struct MomentErrorInputs {
  RigorousBound eps;
  RigorousBound alpha;
  RigorousBound h;
  RigorousBound ln_T;
  RigorousBound ln_T1;
  RigorousBound x0;
};

// Validates the parameter ranges then evaluates at log(alpha + h log T).
MomentErrorConstants eval_moment_error_constants(const MomentErrorInputs& in);
// Same formulas with log(alpha + h log T) supplied as an enclosure y.
MomentErrorConstants eval_moment_error_constants_at(const RigorousBound& eps, const RigorousBound& alpha,
                                                    const RigorousBound& y, const RigorousBound& ln_T1,
                                                    const RigorousBound& x0);
// max{(6/eps) log x0, log 2T0}.
RigorousBound ln_T1_threshold(const RigorousBound& eps, const RigorousBound& x0);

struct GateResult {
  bool passes = false;
  RigorousBound margin;
  RigorousBound C2;
  RigorousBound log_2piM;
};

GateResult audit_M2_gate(const std::string& loglog_decimal);
GateResult audit_M2_gate(double loglog_value);

// Lower bound for J2/T and upper bound for J4/T that the gate parameters give.
struct MomentBoundsAtGate {
  RigorousBound M2;
  RigorousBound M3;
  RigorousBound C3;
};
MomentBoundsAtGate derive_M2_M3(const std::string& loglog_decimal);

struct GapConstantsReport {
  RigorousBound lambda_minus_one;
  double mu = 0.0;
  RigorousBound M, M1, M2, M3;
  RigorousBound M1_from_holder;  // sqrt(M2^3/M3)
  RigorousBound c0, c1, c1_horn, c2;
  bool c1_forms_agree = false;
};

GapConstantsReport eval_gap_constants(const RigorousBound& lambda_minus_one, double mu,
                                      const RigorousBound& slack);
GapConstantsReport eval_gap_constants(double lambda, double mu);

struct MultiplicityConstants {
  RigorousBound kappa;
  RigorousBound delta;          // certified bracket around the root
  double delta_root = 0.0;
  double density_coefficient = 0.0;  // delta rounded up to 5 decimals
  bool kappa_exceeds_published = false;
  bool coefficient_within_thm = false;
};

MultiplicityConstants eval_multiplicity_constants();

// Fixed point lambda = 1 + M1(lambda)/2. The default uses log(2 pi lambda),
// which reproduces 1.1286; literal_fish uses log(1 + 2 pi lambda).
double solve_ideal_lambda();
double solve_ideal_lambda_literal_fish();
double ideal_lambda_residual(double lambda);
double ideal_lambda_M1(double lambda);

enum class Direction { UPPER, LOWER, CONTAINS };
enum class Status { WITHIN_PUBLISHED_BOUND, EXCEEDS, NO_PUBLISHED_VALUE };

const char* to_string(Direction d);
const char* to_string(Status s);

struct ConstantReport {
  std::string name;
  std::string formula_anchor;
  RigorousBound computed;
  std::optional<RigorousBound> published;
  Direction direction = Direction::UPPER;
  Status status = Status::NO_PUBLISHED_VALUE;
  std::string note;
};

ConstantReport make_report(std::string name, std::string anchor, RigorousBound computed,
                           std::optional<RigorousBound> published, Direction dir, std::string note = {});

// The full audit, in a fixed order.
std::vector<ConstantReport> all_reports();
// nullopt when the name is unknown. lambda feeds the c0/c1/c2 reports.
std::optional<ConstantReport> report_by_name(const std::string& name, double lambda = 1.0);
std::vector<std::string> report_names();

std::string report_to_json_line(const ConstantReport& r);

}  // namespace zgap::constants
