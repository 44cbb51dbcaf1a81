#include <cmath>
#include <utility>
#include <vector>

#include "zgap/numerics.hpp"

namespace zgap::numerics {

namespace {

thread_local int g_precision = kDefaultPrecisionBits;

// The exponent range is per-thread in MPFR builds with TLS; widen it before
// the first allocation on each thread so e^(e^30.76) fits.
void ensure_exponent_range() {
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
    done = true;
  }
}

}  // namespace

int working_precision() { return g_precision; }

ScopedPrecision::ScopedPrecision(int bits) : saved_(g_precision) {
  if (bits < MPFR_PREC_MIN) throw DomainError("precision too small");
  g_precision = bits;
}

ScopedPrecision::~ScopedPrecision() { g_precision = saved_; }

mpfr_rnd_t to_mpfr(Dir d) {
  switch (d) {
    case Dir::Down: return MPFR_RNDD;
    case Dir::Up: return MPFR_RNDU;
    default: return MPFR_RNDN;
  }
}

Dir flip(Dir d) {
  if (d == Dir::Down) return Dir::Up;
  if (d == Dir::Up) return Dir::Down;
  return d;
}

BigFloat::BigFloat() {
  ensure_exponent_range();
  mpfr_init2(v_, g_precision);
  live_ = true;
}

BigFloat::BigFloat(double v) : BigFloat() { mpfr_set_d(v_, v, MPFR_RNDN); }

BigFloat::BigFloat(const BigFloat& o) {
  ensure_exponent_range();
  mpfr_init2(v_, std::max<mpfr_prec_t>(mpfr_get_prec(o.v_), g_precision));
  mpfr_set(v_, o.v_, MPFR_RNDN);
  live_ = true;
}

BigFloat::BigFloat(BigFloat&& o) noexcept : BigFloat(static_cast<const BigFloat&>(o)) {}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, std::max<mpfr_prec_t>(mpfr_get_prec(o.v_), g_precision));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) {
    if (mpfr_get_prec(o.v_) >= mpfr_get_prec(v_)) {
      mpfr_swap(v_, o.v_);
    } else {
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
  }
  return *this;
}

BigFloat::~BigFloat() {
  if (live_) mpfr_clear(v_);
}

BigFloat BigFloat::parse(const std::string& decimal, Dir d) {
  BigFloat r;
  if (mpfr_set_str(r.v_, decimal.c_str(), 10, to_mpfr(d)) != 0) {
    throw DomainError("not a decimal literal: " + decimal);
  }
  return r;
}

BigFloat BigFloat::neg_inf() {
  BigFloat r;
  mpfr_set_inf(r.v_, -1);
  return r;
}

BigFloat BigFloat::pi(Dir d) {
  BigFloat r;
  mpfr_const_pi(r.v_, to_mpfr(d));
  return r;
}

double BigFloat::to_double(Dir d) const { return mpfr_get_d(v_, to_mpfr(d)); }

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

bool BigFloat::is_neg_inf() const { return mpfr_inf_p(v_) && mpfr_sgn(v_) < 0; }

int BigFloat::sign() const { return mpfr_sgn(v_); }

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.get(), b.get()); }

}  // namespace zgap::numerics
