#include "zgap/constants.hpp"

namespace zgap::constants {

using numerics::factorial_bound;
using numerics::rb_exp;
using numerics::rb_log;
using numerics::rb_pow;
using numerics::rb_sqrt;

namespace {

RigorousBound I(long long n) { return RigorousBound::integer(n); }
RigorousBound pi() { return RigorousBound::pi(); }
RigorousBound e() { return rb_exp(I(1)); }

bool certainly_greater(const RigorousBound& a, const RigorousBound& b) { return compare(a.lo, b.hi) > 0; }

void check_eps_x0(const RigorousBound& eps, const RigorousBound& x0) {
  if (!eps.certainly_positive()) throw DomainError("eps must be positive");
  if (certainly_greater(eps, rational(1, 88))) throw DomainError("eps must not exceed 1/88");
  if (certainly_greater(exp_decimal("16"), x0)) throw DomainError("x0 must be at least e^16");
}

RigorousBound log_x0(const RigorousBound& x0) { return rb_log(x0); }

// 8 a0 L / eps
RigorousBound selberg_weight(const RigorousBound& eps, const RigorousBound& L) {
  return I(8) * a0() * L / eps;
}

// (base)^(m k) (m k)! / k^(m k - 1)
RigorousBound factorial_block(const RigorousBound& base, int m, int k) {
  long long mk = static_cast<long long>(m) * k;
  return rb_pow(base, mk) * factorial_bound(static_cast<std::uint64_t>(mk)) / rb_pow(I(k), mk - 1);
}

}  // namespace

RigorousBound rational(long long p, long long q) { return I(p) / I(q); }

RigorousBound exp_decimal(const std::string& v) { return rb_exp(RigorousBound::decimal(v)); }

RigorousBound standard_eps() { return rational(1, 88); }
RigorousBound standard_x0() { return rb_exp(I(20000)); }
RigorousBound standard_L() { return RigorousBound::decimal("642.86"); }
RigorousBound ln_T0() { return I(1408) - rb_log(I(2)); }

RigorousBound a0() { return RigorousBound::decimal("1.5453"); }

RigorousBound a1() { return I(13) + I(26) / (I(10) * pi()) + I(13) / (I(3) * pi() * e()); }

RigorousBound a2(const RigorousBound& x0) {
  RigorousBound inner = I(52) + I(124) / (I(10) * pi()) + I(52) / (I(3) * pi() * e());
  return rational(13, 2) + I(18) / (I(10) * pi()) + I(13) / (I(6) * pi() * e()) + I(2) / log_x0(x0) * inner;
}

RigorousBound a3(const RigorousBound& x0) {
  RigorousBound a = a1();
  return I(3) * pi() * a / I(2) + rational(139, 75) + I(62) * pi() * a / (I(75) * log_x0(x0));
}

RigorousBound a4(const RigorousBound& x0, const RigorousBound& eps, int k) {
  RigorousBound lx = log_x0(x0);
  return I(1) + eps / I(k) * (rb_log(I(2)) / lx + a3(x0) / (pi() * a2(x0)));
}

RigorousBound m0() { return rb_sqrt(I(1) + rational(2, 3) * rb_sqrt(rational(6, 5))); }

RigorousBound L0() { return RigorousBound::decimal("642.86"); }

RigorousBound K() { return I(8) * pi() * pi() * exp_decimal("99.8"); }

RigorousBound omega0() { return exp_decimal("12.8471"); }

BaseConstants base_constants(const RigorousBound& x0, const RigorousBound& eps, int k) {
  return {a0(), a1(), a2(x0), a3(x0), a4(x0, eps, k), m0(), L0(), K(), omega0()};
}

Rtilde eval_Rtilde(const RigorousBound& eps, int k, const RigorousBound& x0, const RigorousBound& L) {
  if (k < 1) throw DomainError("k must be positive");
  check_eps_x0(eps, x0);
  const RigorousBound A = a2(x0) * a4(x0, eps, k);
  const RigorousBound w = selberg_weight(eps, L);
  const RigorousBound sqrt13 = rb_sqrt(I(13));
  const RigorousBound sk = rb_sqrt(I(k));
  const RigorousBound ee = e();
  const long long k2 = 2LL * k;

  Rtilde r;
  r.r1 = w * factorial_block(I(8) * eps, 2, k) +
         rb_pow(I(3) * eps / (I(2) * pi() * A * rb_sqrt(I(k2))), k2) * (I(13) + I(1) / rb_pow(I(18), k));
  r.r2 = sqrt13 * rb_pow(I(144) * ee * ee * a1() * eps / (A * sk), k2) *
         rb_sqrt(I(1) + w * factorial_block(I(8) * eps / ee, 8, k));
  r.r3 = sqrt13 * rb_pow(I(24) * ee * ee * eps / (pi() * A * sk), k2) *
         rb_sqrt(I(1) + w * factorial_block(I(8) * eps / (ee * ee), 4, k));
  r.r4 = sqrt13 * rb_pow(I(6) * a1() * eps / (A * sk), k2) *
         rb_sqrt(I(1) + w * factorial_block(I(8) * eps, 4, k));
  return r;
}

RigorousBound eval_C_hat_leading(const RigorousBound& eps2, int k, const RigorousBound& x0) {
  return rb_pow(I(12) * a2(x0) * a4(x0, eps2, k) / eps2 * I(k), 2LL * k) / I(6);
}

RigorousBound eval_C_hat(const RigorousBound& eps1, const RigorousBound& eps2, int k, const RigorousBound& x0,
                         const RigorousBound& L) {
  if (!eps2.certainly_positive()) throw DomainError("eps2 must be positive");
  return (I(1) + eval_Rtilde(eps1, k, x0, L).sum()) * eval_C_hat_leading(eps2, k, x0);
}

RigorousBound eval_C(const RigorousBound& eps, int k, const RigorousBound& x0, const RigorousBound& L) {
  return eval_C_hat(eps, eps, k, x0, L);
}

RigorousBound eval_C_prime(const RigorousBound& eps, int k, const RigorousBound& x0, const RigorousBound& L) {
  check_eps_x0(eps, x0);
  RigorousBound tail = rb_exp(-(I(k) / eps * log_x0(x0)));  // x0^(-k/eps)
  RigorousBound eps2 = eps / (I(1) + eps * tail / (I(k) * log_x0(x0)));
  return (I(1) + tail) * eval_C_hat(eps, eps2, k, x0, L);
}

RigorousBound eval_calC(const RigorousBound& x, const RigorousBound& T, const RigorousBound& xi, int nu,
                        const RigorousBound& L) {
  if (nu < 1) throw DomainError("nu must be a positive integer");
  if (certainly_greater(I(2), x)) throw DomainError("x must be at least 2");
  if (certainly_greater(I(2), T)) throw DomainError("T must be at least 2");
  if (certainly_greater(I(1), xi)) throw DomainError("xi must be at least 1");
  RigorousBound lx = rb_log(x), lT = rb_log(T);
  RigorousBound first = rb_pow(I(2), nu) * rb_pow(xi, I(2) / lx);
  RigorousBound second = L * a0() * rb_pow(I(2), 4LL * nu + 3) * factorial_bound(static_cast<std::uint64_t>(nu)) *
                         rb_pow(lx / lT, nu) * (lT / lx);
  return first + second;
}

C1Result eval_C1(int k) {
  if (k < 1) throw DomainError("k must be positive");
  const auto n = static_cast<std::uint64_t>(2 * k);
  RigorousBound sum = I(0);
  for (std::uint64_t m = 0; m <= n; ++m) {
    RigorousBound binom = factorial_bound(n) / (factorial_bound(m) * factorial_bound(n - m));
    sum = sum + binom * rb_sqrt(factorial_bound(m) * factorial_bound(n - m));
  }
  C1Result r;
  r.exact = I(3) * pi() * m0() / rb_pow(I(4), k) * sum;
  r.cheap_bound = I(6) * pi() * m0() * rb_pow(I(k), k);
  if (compare(r.exact.hi, r.cheap_bound.lo) > 0) {
    throw std::logic_error("C1(k) exceeds 6 pi m0 k^k");
  }
  return r;
}

RigorousBound eval_A(const RigorousBound& a, const RigorousBound& log_X) {
  if (!a.certainly_positive() || certainly_greater(a, rational(7, 10))) throw DomainError("A requires 0 < a <= 7/10");
  RigorousBound log2 = rb_log(I(2));
  if (certainly_greater(log2, log_X)) throw DomainError("A requires X >= 2");
  return numerics::rb_abs(rb_log(a)) + RigorousBound::decimal("13.88") + rb_log(I(1) + a / log2) +
         I(3) / (log_X * log_X);
}

}  // namespace zgap::constants
