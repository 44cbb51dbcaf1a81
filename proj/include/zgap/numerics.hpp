#pragma once

#include <mpfr.h>

#include <cstdint>
#include <functional>
#include <string>

#include "zgap/errors.hpp"

namespace zgap::numerics {

inline constexpr int kDefaultPrecisionBits = 160;

// Working precision for new BigFloats on the calling thread.
int working_precision();

class ScopedPrecision {
 public:
  explicit ScopedPrecision(int bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  int saved_;
};

// Direction in which a result's *value* is rounded.
enum class Dir { Nearest, Down, Up };

mpfr_rnd_t to_mpfr(Dir d);
Dir flip(Dir d);

// Owning wrapper around mpfr_t.
class BigFloat {
 public:
  BigFloat();
  explicit BigFloat(double v);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat parse(const std::string& decimal, Dir d = Dir::Nearest);
  static BigFloat neg_inf();
  static BigFloat pi(Dir d = Dir::Nearest);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double(Dir d = Dir::Nearest) const;
  std::string to_string(int digits = 40) const;
  bool is_neg_inf() const;
  int sign() const;

 private:
  mpfr_t v_;
  bool live_ = false;
};

int compare(const BigFloat& a, const BigFloat& b);

// Signed real stored as (sign, ln|x|).
struct LogReal {
  int sign = 0;
  BigFloat ln_mag = BigFloat::neg_inf();

  static LogReal zero() { return {}; }
  static LogReal one();
  static LogReal from_double(double v, Dir d = Dir::Nearest);
  static LogReal from_ln(int sign, double ln);
  static LogReal from_ln(int sign, const BigFloat& ln);
  static LogReal from_value(const BigFloat& v, Dir d = Dir::Nearest);
  static LogReal parse(const std::string& decimal, Dir d = Dir::Nearest);

  // Real value; huge magnitudes rely on MPFR's extended exponent range.
  BigFloat to_value(Dir d = Dir::Nearest) const;
  double to_double() const;
  double ln_double() const;
  double log10_abs() const;
  std::string ln_string(int digits = 40) const;
};

LogReal log_add(const LogReal& a, const LogReal& b, Dir d = Dir::Nearest);
LogReal log_sub(const LogReal& a, const LogReal& b, Dir d = Dir::Nearest);
LogReal log_mul(const LogReal& a, const LogReal& b, Dir d = Dir::Nearest);
LogReal log_div(const LogReal& a, const LogReal& b, Dir d = Dir::Nearest);
LogReal log_neg(const LogReal& a);
LogReal log_inv(const LogReal& a);
LogReal log_sqrt(const LogReal& a);
// a^r for a > 0.
LogReal log_pow(const LogReal& a, const BigFloat& r, Dir d = Dir::Nearest);

int compare(const LogReal& a, const LogReal& b);

inline LogReal operator+(const LogReal& a, const LogReal& b) { return log_add(a, b); }
inline LogReal operator-(const LogReal& a, const LogReal& b) { return log_sub(a, b); }
inline LogReal operator*(const LogReal& a, const LogReal& b) { return log_mul(a, b); }
inline LogReal operator/(const LogReal& a, const LogReal& b) { return log_div(a, b); }
inline LogReal operator-(const LogReal& a) { return log_neg(a); }
inline bool operator<(const LogReal& a, const LogReal& b) { return compare(a, b) < 0; }
inline bool operator<=(const LogReal& a, const LogReal& b) { return compare(a, b) <= 0; }
inline bool operator>(const LogReal& a, const LogReal& b) { return compare(a, b) > 0; }
inline bool operator>=(const LogReal& a, const LogReal& b) { return compare(a, b) >= 0; }

// Enclosure [lo, hi]. Every operation rounds lo down and hi up.
struct RigorousBound {
  LogReal lo;
  LogReal hi;
  bool rounding_certified = true;

  static RigorousBound exact(const LogReal& v);
  static RigorousBound from_double(double v);
  static RigorousBound decimal(const std::string& s);
  static RigorousBound integer(long long n);
  static RigorousBound pi();
  static RigorousBound hull(const LogReal& lo, const LogReal& hi);

  bool contains(const LogReal& v) const;
  bool certainly_positive() const { return lo.sign > 0; }
  bool certainly_negative() const { return hi.sign < 0; }
  bool certainly_below(const LogReal& v) const { return compare(hi, v) < 0; }
  bool certainly_above(const LogReal& v) const { return compare(lo, v) > 0; }
  double mid_double() const;
  double lo_double() const { return lo.to_double(); }
  double hi_double() const { return hi.to_double(); }
};

RigorousBound operator+(const RigorousBound& a, const RigorousBound& b);
RigorousBound operator-(const RigorousBound& a, const RigorousBound& b);
RigorousBound operator*(const RigorousBound& a, const RigorousBound& b);
RigorousBound operator/(const RigorousBound& a, const RigorousBound& b);
RigorousBound operator-(const RigorousBound& a);

RigorousBound rb_abs(const RigorousBound& a);
RigorousBound rb_sqrt(const RigorousBound& a);
RigorousBound rb_exp(const RigorousBound& a);
RigorousBound rb_log(const RigorousBound& a);
RigorousBound rb_pow(const RigorousBound& base, const RigorousBound& e);
RigorousBound rb_pow(const RigorousBound& base, long long n);
RigorousBound rb_max(const RigorousBound& a, const RigorousBound& b);
RigorousBound rb_min(const RigorousBound& a, const RigorousBound& b);

// ln(n!) as a LogReal whose value is n!.
LogReal ln_factorial(std::uint64_t n);
RigorousBound factorial_bound(std::uint64_t n);

// Cin(z) = integral_0^z (1 - cos t)/t dt.
double cin(double z);

inline constexpr double kRootTolerance = 1e-12;

// Bisection on a sign-changing bracket.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = kRootTolerance);

}  // namespace zgap::numerics
