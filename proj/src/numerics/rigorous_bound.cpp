#include <array>

#include "zgap/numerics.hpp"

namespace zgap::numerics {

namespace {

const LogReal& min_of(const LogReal& a, const LogReal& b) { return compare(a, b) <= 0 ? a : b; }
const LogReal& max_of(const LogReal& a, const LogReal& b) { return compare(a, b) >= 0 ? a : b; }

RigorousBound make(LogReal lo, LogReal hi, bool cert) {
  RigorousBound r;
  r.lo = std::move(lo);
  r.hi = std::move(hi);
  r.rounding_certified = cert;
  return r;
}

// Value of x as a BigFloat, rounded in direction d.
BigFloat value(const LogReal& x, Dir d) { return x.to_value(d); }

}  // namespace

RigorousBound RigorousBound::exact(const LogReal& v) { return make(v, v, true); }

RigorousBound RigorousBound::from_double(double v) { return exact(LogReal::from_double(v)); }

RigorousBound RigorousBound::decimal(const std::string& s) {
  return make(LogReal::parse(s, Dir::Down), LogReal::parse(s, Dir::Up), true);
}

RigorousBound RigorousBound::integer(long long n) {
  BigFloat v;
  mpfr_set_si(v.get(), static_cast<long>(n), MPFR_RNDN);
  if (mpfr_get_si(v.get(), MPFR_RNDN) != n) throw DomainError("integer exceeds precision");
  return make(LogReal::from_value(v, Dir::Down), LogReal::from_value(v, Dir::Up), true);
}

RigorousBound RigorousBound::pi() {
  return make(LogReal::from_value(BigFloat::pi(Dir::Down), Dir::Down),
              LogReal::from_value(BigFloat::pi(Dir::Up), Dir::Up), true);
}

RigorousBound RigorousBound::hull(const LogReal& lo, const LogReal& hi) {
  return make(min_of(lo, hi), max_of(lo, hi), true);
}

bool RigorousBound::contains(const LogReal& v) const {
  return compare(lo, v) <= 0 && compare(v, hi) <= 0;
}

double RigorousBound::mid_double() const {
  BigFloat a = lo.to_value(), b = hi.to_value(), m;
  mpfr_add(m.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m.to_double();
}

RigorousBound operator+(const RigorousBound& a, const RigorousBound& b) {
  return make(log_add(a.lo, b.lo, Dir::Down), log_add(a.hi, b.hi, Dir::Up),
              a.rounding_certified && b.rounding_certified);
}

RigorousBound operator-(const RigorousBound& a) { return make(log_neg(a.hi), log_neg(a.lo), a.rounding_certified); }

RigorousBound operator-(const RigorousBound& a, const RigorousBound& b) { return a + (-b); }

RigorousBound operator*(const RigorousBound& a, const RigorousBound& b) {
  std::array<const LogReal*, 2> x{&a.lo, &a.hi}, y{&b.lo, &b.hi};
  LogReal lo, hi;
  bool first = true;
  for (const LogReal* p : x) {
    for (const LogReal* q : y) {
      LogReal dn = log_mul(*p, *q, Dir::Down);
      LogReal up = log_mul(*p, *q, Dir::Up);
      if (first) {
        lo = dn;
        hi = up;
        first = false;
      } else {
        if (compare(dn, lo) < 0) lo = dn;
        if (compare(up, hi) > 0) hi = up;
      }
    }
  }
  return make(lo, hi, a.rounding_certified && b.rounding_certified);
}

RigorousBound operator/(const RigorousBound& a, const RigorousBound& b) {
  if (b.lo.sign <= 0 && b.hi.sign >= 0) throw DomainError("divisor enclosure contains zero");
  // 1/x is exact in the log domain.
  return a * make(log_inv(b.hi), log_inv(b.lo), b.rounding_certified);
}

RigorousBound rb_abs(const RigorousBound& a) {
  if (a.lo.sign >= 0) return a;
  if (a.hi.sign <= 0) return -a;
  return make(LogReal::zero(), max_of(log_neg(a.lo), a.hi), a.rounding_certified);
}

RigorousBound rb_sqrt(const RigorousBound& a) {
  if (a.lo.sign < 0) throw DomainError("sqrt of enclosure with negative part");
  return make(log_sqrt(a.lo), log_sqrt(a.hi), a.rounding_certified);
}

RigorousBound rb_exp(const RigorousBound& a) {
  return make(LogReal::from_ln(1, value(a.lo, Dir::Down)), LogReal::from_ln(1, value(a.hi, Dir::Up)),
              a.rounding_certified);
}

RigorousBound rb_log(const RigorousBound& a) {
  if (a.lo.sign <= 0) throw DomainError("log of enclosure with nonpositive part");
  return make(LogReal::from_value(a.lo.ln_mag, Dir::Down), LogReal::from_value(a.hi.ln_mag, Dir::Up),
              a.rounding_certified);
}

RigorousBound rb_pow(const RigorousBound& base, const RigorousBound& e) {
  if (base.lo.sign <= 0) throw DomainError("real power of nonpositive enclosure");
  return rb_exp(e * rb_log(base));
}

RigorousBound rb_pow(const RigorousBound& base, long long n) {
  if (n == 0) return RigorousBound::integer(1);
  if (n < 0) return RigorousBound::integer(1) / rb_pow(base, -n);
  if (base.lo.sign > 0) {
    BigFloat e;
    mpfr_set_si(e.get(), static_cast<long>(n), MPFR_RNDN);
    return make(log_pow(base.lo, e, Dir::Down), log_pow(base.hi, e, Dir::Up), base.rounding_certified);
  }
  RigorousBound r = base;
  for (long long i = 1; i < n; ++i) r = r * base;
  if (n % 2 == 0 && r.lo.sign < 0) r.lo = LogReal::zero();
  return r;
}

RigorousBound rb_max(const RigorousBound& a, const RigorousBound& b) {
  return make(max_of(a.lo, b.lo), max_of(a.hi, b.hi), a.rounding_certified && b.rounding_certified);
}

RigorousBound rb_min(const RigorousBound& a, const RigorousBound& b) {
  return make(min_of(a.lo, b.lo), min_of(a.hi, b.hi), a.rounding_certified && b.rounding_certified);
}

RigorousBound factorial_bound(std::uint64_t n) {
  BigFloat x, lo, hi;
  mpfr_set_ui(x.get(), static_cast<unsigned long>(n + 1), MPFR_RNDN);
  mpfr_lngamma(lo.get(), x.get(), MPFR_RNDD);
  mpfr_lngamma(hi.get(), x.get(), MPFR_RNDU);
  return make(LogReal::from_ln(1, lo), LogReal::from_ln(1, hi), true);
}

}  // namespace zgap::numerics
