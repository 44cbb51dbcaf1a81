#include "zgap/constants.hpp"

namespace zgap::constants {

using numerics::rb_exp;
using numerics::rb_log;
using numerics::rb_max;
using numerics::rb_pow;
using numerics::rb_sqrt;

namespace {

RigorousBound I(long long n) { return RigorousBound::integer(n); }

bool certainly_greater(const RigorousBound& a, const RigorousBound& b) { return compare(a.lo, b.hi) > 0; }

RigorousBound fourth_root(const RigorousBound& v) { return rb_sqrt(rb_sqrt(v)); }

}  // namespace

RigorousBound ln_T1_threshold(const RigorousBound& eps, const RigorousBound& x0) {
  return rb_max(I(6) / eps * rb_log(x0), ln_T0() + rb_log(I(2)));
}

MomentErrorConstants eval_moment_error_constants_at(const RigorousBound& eps, const RigorousBound& alpha,
                                                    const RigorousBound& y, const RigorousBound& ln_T1,
                                                    const RigorousBound& x0) {
  const RigorousBound pi = RigorousBound::pi();
  const RigorousBound pi2 = pi * pi;
  const RigorousBound pi4 = pi2 * pi2;
  const RigorousBound tail = rb_exp(-((I(1) - eps) * ln_T1));  // T1^(-(1-eps))
  const RigorousBound C11 = eval_C1(1).exact;
  const RigorousBound C12 = eval_C1(2).exact;
  const RigorousBound half_eps = eps / I(2);

  MomentErrorConstants r;
  r.y = y;
  r.D1 = (numerics::rb_abs(rb_log(eps)) + eval_A(alpha * eps, eps * ln_T1) + I(4) * C11 * tail) / pi2;
  const RigorousBound A2 = eval_A(alpha * half_eps, half_eps * ln_T1);
  r.D2 = I(6) / pi4 * (A2 + numerics::rb_abs(rb_log(half_eps))) +
         I(3) / (pi4 * y) * (A2 * A2 + I(3) * pi4 / I(160) + I(16) * C12 / I(3) * tail);

  const RigorousBound third = eps / I(3);
  r.E1 = I(1) / pi2 + r.D1 / y;
  r.F1 = I(3) / pi4 + r.D2 / y;
  r.E2 = I(2) * (eval_C(third, 1, x0) + eval_C_prime(third, 1, x0));
  r.F2 = I(8) * (eval_C(third, 2, x0) + eval_C_prime(third, 2, x0));

  const RigorousBound sy = rb_sqrt(y);
  r.C2 = I(2) * rb_sqrt(r.E1 * r.E2) + (r.E1 + r.D1) / sy;
  r.C3 = I(4) * fourth_root(r.F1 * r.F1 * r.F1 * r.F2) + (I(6) * rb_sqrt(r.F1 * r.F2) + r.D2) / sy +
         I(4) * fourth_root(r.F1 * r.F2 * r.F2 * r.F2) / y + r.F2 / (y * sy);
  return r;
}

MomentErrorConstants eval_moment_error_constants(const MomentErrorInputs& in) {
  if (!in.eps.certainly_positive() || certainly_greater(in.eps, rational(3, 88))) {
    throw DomainError("eps must lie in (0, 3/88]");
  }
  if (certainly_greater(I(1), in.alpha) || certainly_greater(in.alpha, I(7) / (I(10) * in.eps))) {
    throw DomainError("alpha must lie in [1, 7/(10 eps)]");
  }
  if (!in.h.certainly_positive() || certainly_greater(in.h, I(1))) throw DomainError("h must lie in (0, 1]");
  if (certainly_greater(ln_T1_threshold(in.eps, in.x0), in.ln_T1)) {
    throw DomainError("T1 below max{x0^(6/eps), 2 T0}");
  }
  if (certainly_greater(in.ln_T1, in.ln_T)) throw DomainError("T must be at least T1");
  RigorousBound y = rb_log(in.alpha + in.h * in.ln_T);
  return eval_moment_error_constants_at(in.eps, in.alpha, y, in.ln_T1, in.x0);
}

namespace {

struct GateSetup {
  RigorousBound L;  // log(2 pi M)
  RigorousBound y;  // enclosure of log(1 + 2 pi M lambda), lambda in [1, 2]
  MomentErrorConstants mc;
};

GateSetup gate_setup(const RigorousBound& loglog) {
  const RigorousBound eps = rational(3, 88);
  const RigorousBound x0 = standard_x0();
  GateSetup g;
  g.L = rb_exp(loglog);
  g.y = RigorousBound::hull(g.L.lo, (g.L + RigorousBound::decimal("0.7")).hi);
  g.mc = eval_moment_error_constants_at(eps, I(1), g.y, ln_T1_threshold(eps, x0), x0);
  return g;
}

GateResult gate_from(const RigorousBound& loglog) {
  if (!loglog.certainly_positive()) throw DomainError("loglog value must be positive");
  GateSetup g = gate_setup(loglog);
  const RigorousBound pi = RigorousBound::pi();
  GateResult r;
  r.log_2piM = g.L;
  r.C2 = g.mc.C2;
  r.margin = I(1) - pi * pi * g.mc.C2 / rb_sqrt(g.L);
  r.passes = r.margin.certainly_positive();
  return r;
}

}  // namespace

GateResult audit_M2_gate(const std::string& loglog_decimal) { return gate_from(RigorousBound::decimal(loglog_decimal)); }

GateResult audit_M2_gate(double loglog_value) { return gate_from(RigorousBound::from_double(loglog_value)); }

MomentBoundsAtGate derive_M2_M3(const std::string& loglog_decimal) {
  const RigorousBound pi = RigorousBound::pi();
  const RigorousBound pi2 = pi * pi;
  GateResult gate = audit_M2_gate(loglog_decimal);
  GateSetup g = gate_setup(RigorousBound::decimal(loglog_decimal));
  MomentBoundsAtGate r;
  // J2 >= (L/pi^2)(1 - pi^2 C2/sqrt L) T
  r.M2 = g.L / pi2 * gate.margin;
  // J4 <= (3/pi^4) y^2 T + C3 y^(3/2) T at the largest y
  RigorousBound ytop = RigorousBound::exact(g.y.hi);
  r.C3 = g.mc.C3;
  r.M3 = I(3) / (pi2 * pi2) * ytop * ytop + g.mc.C3 * ytop * rb_sqrt(ytop);
  return r;
}

}  // namespace zgap::constants
