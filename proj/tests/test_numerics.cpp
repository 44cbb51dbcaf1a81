#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zgap/numerics.hpp"

using namespace zgap;
using namespace zgap::numerics;

TEST_CASE("precision guard restores the previous setting") {
  const int before = working_precision();
  {
    ScopedPrecision p(512);
    CHECK(working_precision() == 512);
    BigFloat x(1.0);
    CHECK(mpfr_get_prec(x.get()) == 512);
  }
  CHECK(working_precision() == before);
  CHECK(before == kDefaultPrecisionBits);
}

TEST_CASE("directed decimal parsing brackets the literal") {
  BigFloat lo = BigFloat::parse("0.1", Dir::Down);
  BigFloat hi = BigFloat::parse("0.1", Dir::Up);
  CHECK(compare(lo, hi) < 0);
  CHECK(lo.to_double(Dir::Up) >= 0.1 - 1e-17);
  CHECK(hi.to_double(Dir::Down) <= 0.1 + 1e-17);
}

TEST_CASE("LogReal arithmetic") {
  const LogReal a = LogReal::from_double(3.0), b = LogReal::from_double(-5.0);
  CHECK(log_add(a, b).to_double() == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(log_mul(a, b).to_double() == doctest::Approx(-15.0).epsilon(1e-15));
  CHECK(log_div(b, a).to_double() == doctest::Approx(-5.0 / 3.0).epsilon(1e-15));
  CHECK(log_sub(a, a).sign == 0);
  CHECK(log_sqrt(LogReal::from_double(2.0)).to_double() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(log_pow(LogReal::from_double(2.0), BigFloat(10.0)).to_double() == doctest::Approx(1024.0).epsilon(1e-14));
}

TEST_CASE("LogReal handles doubly exponential magnitudes") {
  // e^{e^{30.76}} has ln about 2.29e13; sums keep the larger term.
  const LogReal big = LogReal::from_ln(1, std::exp(30.76));
  const LogReal sum = log_add(big, LogReal::from_double(1e300));
  CHECK(sum.ln_double() == doctest::Approx(std::exp(30.76)).epsilon(1e-15));
  CHECK(log_inv(big).ln_double() == doctest::Approx(-std::exp(30.76)).epsilon(1e-15));
  CHECK(big.log10_abs() == doctest::Approx(std::exp(30.76) / std::log(10.0)).epsilon(1e-14));
  // Value-level evaluation relies on the widened exponent range.
  CHECK(mpfr_inf_p(big.to_value().get()) == 0);
}

TEST_CASE("rounding directions of log_add") {
  const LogReal a = LogReal::from_double(1.0 / 3.0), b = LogReal::from_double(std::numbers::pi);
  const LogReal d = log_add(a, b, Dir::Down), u = log_add(a, b, Dir::Up);
  CHECK(compare(d, u) <= 0);
  CHECK(u.to_double() - d.to_double() < 1e-15);
}

namespace {

// Literals carry 36 digits, coarser than a 160-bit enclosure.
bool encloses_literal(const RigorousBound& b, const char* lit) {
  const RigorousBound slack = RigorousBound::decimal("1e-34");
  const RigorousBound v = RigorousBound::decimal(lit);
  return compare(b.lo, (v + slack).hi) <= 0 && compare(b.hi, (v - slack).lo) >= 0 &&
         compare(b.lo, b.hi) <= 0;
}

}  // namespace

TEST_CASE("RigorousBound enclosures") {
  const RigorousBound third = RigorousBound::integer(1) / RigorousBound::integer(3);
  CHECK(third.lo_double() <= 1.0 / 3.0);
  CHECK(third.hi_double() >= 1.0 / 3.0);
  CHECK(compare(third.lo, third.hi) < 0);

  const RigorousBound p = RigorousBound::pi();
  CHECK(encloses_literal(p, "3.14159265358979323846264338327950288"));

  const RigorousBound x = RigorousBound::decimal("-2.5");
  CHECK(x.certainly_negative());
  CHECK(rb_abs(x).certainly_positive());
  const RigorousBound sq = x * x;
  CHECK(sq.contains(LogReal::from_double(6.25)));

  const RigorousBound e = rb_exp(RigorousBound::integer(1));
  CHECK(encloses_literal(e, "2.71828182845904523536028747135266250"));
  CHECK(rb_log(e).contains(LogReal::one()));
  CHECK(rb_pow(RigorousBound::integer(2), 64).contains(LogReal::parse("18446744073709551616")));
  CHECK(encloses_literal(rb_sqrt(RigorousBound::integer(2)), "1.41421356237309504880168872420969808"));

  const RigorousBound h = RigorousBound::hull(LogReal::from_double(-1.0), LogReal::from_double(2.0));
  CHECK(h.contains(LogReal::zero()));
  CHECK_FALSE(h.certainly_positive());
  CHECK_FALSE(h.certainly_negative());
}

TEST_CASE("factorials") {
  // lgamma(101)
  CHECK(ln_factorial(100).ln_double() == doctest::Approx(363.73937555556347).epsilon(1e-15));
  CHECK(ln_factorial(0).ln_double() == 0.0);
  CHECK(factorial_bound(20).contains(LogReal::parse("2432902008176640000")));
}

TEST_CASE("Cin") {
  // mpmath: euler + log(z) - ci(z)
  CHECK(cin(10.0) == doctest::Approx(2.925257190900034).epsilon(1e-14));
  CHECK(cin(std::log(2.0)) == doctest::Approx(0.11773422926307012).epsilon(1e-14));
  CHECK(cin(std::log(2.0)) < 0.118);
  CHECK(cin(0.0) == 0.0);
  // Series and continued-fraction branches meet at 4.
  CHECK(std::abs(cin(4.0 - 1e-12) - cin(4.0 + 1e-12)) < 1e-11);
}

TEST_CASE("find_root") {
  // Literal fixed point lambda = 1 + sqrt(log(1 + 2 pi lambda)/(3 pi^2))/2; mpmath gives 1.13297354755.
  auto f = [](double l) {
    return l - 1.0 - 0.5 * std::sqrt(std::log1p(2.0 * std::numbers::pi * l) / (3.0 * std::numbers::pi * std::numbers::pi));
  };
  CHECK(find_root(f, 1.0, 2.0) == doctest::Approx(1.13297354755).epsilon(1e-10));
  CHECK(std::abs(find_root([](double x) { return x * x - 2.0; }, 0.0, 2.0) - std::sqrt(2.0)) < 1e-12);
  CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoBracket);
}
