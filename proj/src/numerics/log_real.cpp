#include <cmath>

#include "zgap/numerics.hpp"

namespace zgap::numerics {

namespace {

// Rounding direction for ln|x| that moves the value of x in direction d.
Dir ln_dir(int sign, Dir d) { return sign > 0 ? d : flip(d); }

}  // namespace

LogReal LogReal::one() { return from_ln(1, 0.0); }

LogReal LogReal::from_double(double v, Dir d) { return from_value(BigFloat(v), d); }

LogReal LogReal::from_ln(int sign, double ln) {
  if (sign == 0) return zero();
  LogReal r;
  r.sign = sign > 0 ? 1 : -1;
  mpfr_set_d(r.ln_mag.get(), ln, MPFR_RNDN);
  return r;
}

LogReal LogReal::from_ln(int sign, const BigFloat& ln) {
  if (sign == 0 || ln.is_neg_inf()) return zero();
  LogReal r;
  r.sign = sign > 0 ? 1 : -1;
  r.ln_mag = ln;
  return r;
}

LogReal LogReal::from_value(const BigFloat& v, Dir d) {
  int s = v.sign();
  if (s == 0) return zero();
  LogReal r;
  r.sign = s > 0 ? 1 : -1;
  BigFloat a;
  mpfr_abs(a.get(), v.get(), MPFR_RNDN);
  mpfr_log(r.ln_mag.get(), a.get(), to_mpfr(ln_dir(r.sign, d)));
  return r;
}

LogReal LogReal::parse(const std::string& decimal, Dir d) {
  return from_value(BigFloat::parse(decimal, d), d);
}

BigFloat LogReal::to_value(Dir d) const {
  BigFloat r;
  if (sign == 0) {
    mpfr_set_zero(r.get(), 1);
    return r;
  }
  mpfr_exp(r.get(), ln_mag.get(), to_mpfr(ln_dir(sign, d)));
  if (sign < 0) mpfr_neg(r.get(), r.get(), MPFR_RNDN);
  return r;
}

double LogReal::to_double() const { return to_value().to_double(); }

double LogReal::ln_double() const { return ln_mag.to_double(); }

double LogReal::log10_abs() const { return ln_mag.to_double() / std::log(10.0); }

std::string LogReal::ln_string(int digits) const { return ln_mag.to_string(digits); }

LogReal log_add(const LogReal& a, const LogReal& b, Dir d) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  bool a_big = compare(a.ln_mag, b.ln_mag) >= 0;
  const LogReal& big = a_big ? a : b;
  const LogReal& small = a_big ? b : a;
  LogReal r;
  r.sign = big.sign;
  Dir ld = ln_dir(r.sign, d);
  BigFloat t;
  if (a.sign == b.sign) {
    // ln = M + log1p(exp(m - M)); increasing in m - M.
    mpfr_sub(t.get(), small.ln_mag.get(), big.ln_mag.get(), to_mpfr(ld));
    mpfr_exp(t.get(), t.get(), to_mpfr(ld));
    mpfr_log1p(t.get(), t.get(), to_mpfr(ld));
  } else {
    if (compare(a.ln_mag, b.ln_mag) == 0) return LogReal::zero();
    // ln = M + log1p(-exp(m - M)); decreasing in m - M.
    mpfr_sub(t.get(), small.ln_mag.get(), big.ln_mag.get(), to_mpfr(flip(ld)));
    mpfr_exp(t.get(), t.get(), to_mpfr(flip(ld)));
    mpfr_neg(t.get(), t.get(), MPFR_RNDN);
    mpfr_log1p(t.get(), t.get(), to_mpfr(ld));
    if (t.is_neg_inf()) return LogReal::zero();
  }
  mpfr_add(r.ln_mag.get(), big.ln_mag.get(), t.get(), to_mpfr(ld));
  return r;
}

LogReal log_sub(const LogReal& a, const LogReal& b, Dir d) { return log_add(a, log_neg(b), d); }

LogReal log_mul(const LogReal& a, const LogReal& b, Dir d) {
  if (a.sign == 0 || b.sign == 0) return LogReal::zero();
  LogReal r;
  r.sign = a.sign * b.sign;
  mpfr_add(r.ln_mag.get(), a.ln_mag.get(), b.ln_mag.get(), to_mpfr(ln_dir(r.sign, d)));
  return r;
}

LogReal log_div(const LogReal& a, const LogReal& b, Dir d) {
  if (b.sign == 0) throw DomainError("division by zero");
  if (a.sign == 0) return LogReal::zero();
  LogReal r;
  r.sign = a.sign * b.sign;
  mpfr_sub(r.ln_mag.get(), a.ln_mag.get(), b.ln_mag.get(), to_mpfr(ln_dir(r.sign, d)));
  return r;
}

LogReal log_neg(const LogReal& a) {
  LogReal r = a;
  r.sign = -a.sign;
  return r;
}

LogReal log_inv(const LogReal& a) {
  if (a.sign == 0) throw DomainError("inverse of zero");
  LogReal r = a;
  mpfr_neg(r.ln_mag.get(), a.ln_mag.get(), MPFR_RNDN);
  return r;
}

LogReal log_sqrt(const LogReal& a) {
  if (a.sign < 0) throw DomainError("sqrt of negative");
  if (a.sign == 0) return LogReal::zero();
  LogReal r = a;
  mpfr_div_2ui(r.ln_mag.get(), a.ln_mag.get(), 1, MPFR_RNDN);
  return r;
}

LogReal log_pow(const LogReal& a, const BigFloat& e, Dir d) {
  if (a.sign < 0) throw DomainError("power of negative base");
  if (a.sign == 0) {
    if (e.sign() > 0) return LogReal::zero();
    throw DomainError("nonpositive power of zero");
  }
  LogReal r;
  r.sign = 1;
  mpfr_mul(r.ln_mag.get(), a.ln_mag.get(), e.get(), to_mpfr(d));
  return r;
}

int compare(const LogReal& a, const LogReal& b) {
  if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
  if (a.sign == 0) return 0;
  int c = compare(a.ln_mag, b.ln_mag);
  return a.sign > 0 ? c : -c;
}

LogReal ln_factorial(std::uint64_t n) {
  LogReal r;
  r.sign = 1;
  BigFloat x;
  mpfr_set_ui(x.get(), static_cast<unsigned long>(n + 1), MPFR_RNDN);
  mpfr_lngamma(r.ln_mag.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace zgap::numerics
