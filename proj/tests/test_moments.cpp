#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "zgap/errors.hpp"
#include "zgap/moments.hpp"
#include "zgap/primes.hpp"
#include "zgap/zeros.hpp"
#include "zgap/zeta.hpp"

using namespace zgap;
using namespace zgap::moments;

namespace {

constexpr double kPi = std::numbers::pi;

const zeros::ZeroList& zl() {
  static const zeros::ZeroList z = zeros::isolate_zeros(10.0, 420.0);
  return z;
}

const primes::PrimeTable& table() {
  static const primes::PrimeTable t = primes::sieve(1'000'000);
  return t;
}

}  // namespace

TEST_CASE("S from zeros matches the direct evaluation") {
  for (double t : {50.5, 123.4, 300.0}) {
    const double a = s_from_zeros(t, zl());
    const double b = zeta::s_of_t(t, zeta::SMethod::ARG_TRACKING).s_value;
    CHECK(std::abs(a - b) < 1e-6);
  }
  const double t = 200.0, h = 0.37;
  CHECK(delta_S(t, h, zl()) == doctest::Approx(s_from_zeros(t + h, zl()) - s_from_zeros(t, zl())).epsilon(1e-9));
  CHECK(delta_S(t, 0.0, zl()) == 0.0);
  CHECK_THROWS_AS(delta_S(415.0, 10.0, zl()), OutOfRange);
}

TEST_CASE("main terms") {
  const double T = 1000.0, h = 0.5;
  const double y = std::log(2.0 + h * std::log(T));
  CHECK(moment_main_term(2, T, h) == doctest::Approx(T * y / (kPi * kPi)));
  CHECK(moment_main_term(4, T, h) == doctest::Approx(3.0 * T * y * y / std::pow(kPi, 4)));
  CHECK(moment_main_term(3, T, h) == 0.0);
  CHECK_THROWS_AS(moment_main_term(0, T, h), DomainError);
}

TEST_CASE("moment integrals against a midpoint scan") {
  const double T = 200.0, h = 0.9;
  const std::vector<int> powers{1, 2, 4};
  const auto est = moment_J(powers, T, h, zl());
  REQUIRE(est.size() == 3);
  const int cells = 200000;
  const double cell = T / cells;
  double j1 = 0, j2 = 0, j4 = 0, fmax = 0;
  for (int i = 0; i < cells; ++i) {
    const double d = std::abs(delta_S(T + (i + 0.5) * cell, h, zl()));
    j1 += d * cell;
    j2 += d * d * cell;
    j4 += d * d * d * d * cell;
    fmax = std::max(fmax, d);
  }
  // Jumps misplace at most one cell each; every ordinate in [T - h, 2T] makes two.
  const double breaks = 2.0 * static_cast<double>(zl().count_in(T - h, 2 * T) + 2);
  CHECK(std::abs(est[0].value - j1) <= breaks * cell * fmax + 1e-6);
  CHECK(std::abs(est[1].value - j2) <= breaks * cell * fmax * fmax + 1e-6);
  CHECK(std::abs(est[2].value - j4) <= breaks * cell * std::pow(fmax, 4) + 1e-6);
  for (const auto& e : est) CHECK(e.quad_error < 1e-8 * (1.0 + e.value));
  CHECK(std::isnan(est[0].ratio));
  CHECK(est[1].ratio == doctest::Approx(est[1].value / est[1].main_term));
}

TEST_CASE("quadrature orders agree") {
  const double T = 150.0, h = 0.8;
  const double ref = moment_J(2, T, h, zl(), 30).value;
  for (int q : {7, 15, 20}) CHECK(moment_J(2, T, h, zl(), q).value == doctest::Approx(ref).epsilon(1e-9));
  CHECK_THROWS_AS(moment_J(2, T, h, zl(), 11), DomainError);
}

TEST_CASE("moments vanish at h = 0") {
  const auto e = moment_J(2, 100.0, 0.0, zl());
  CHECK(e.value == 0.0);
  CHECK(e.ratio == 0.0);
}

TEST_CASE("Dirichlet approximant identity") {
  // P(t) = Q(t) - S(t) + S(t+h) - Q(t+h)
  const double T = 200.0, eps = 0.5, h = 0.3;
  for (int k : {1, 2}) {
    for (double t : {201.0, 257.3, 333.3}) {
      const double p = dirichlet_P(k, t, h, T, eps, table());
      const double rhs = dirichlet_Q(k, t, T, eps, table(), zl()) - s_from_zeros(t, zl()) +
                         s_from_zeros(t + h, zl()) - dirichlet_Q(k, t + h, T, eps, table(), zl());
      CHECK(std::abs(p - rhs) < 1e-8);
    }
  }
  CHECK(dirichlet_P(1, 250.0, 0.0, T, eps, table()) == 0.0);
  CHECK_THROWS_AS(dirichlet_P(0, 250.0, h, T, eps, table()), DomainError);
}

TEST_CASE("Dirichlet approximant squared coefficient identity") {
  // |p^{-1/2}(p^{-ih} - 1)|^2 = 2(1 - cos(h log p))/p, so the mean of P^2 over a long
  // window approaches (1/pi^2) sum (1 - cos(h log p))/p.
  const double T = 1e4, eps = 0.3, h = 0.7;
  const double X = std::pow(T, eps);
  const double predicted = primes::prime_cos_sum(X, h, table()) / (kPi * kPi);
  double mean = 0.0;
  const int n = 200000;
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> u(T, 1e7);
  for (int i = 0; i < n; ++i) {
    const double p = dirichlet_P(1, u(g), h, T, eps, table());
    mean += p * p / n;
  }
  CHECK(mean == doctest::Approx(predicted).epsilon(0.02));
}

TEST_CASE("mean value inequality") {
  DirichletPoly a, b;
  a.cutoff = b.cutoff = 50;
  std::mt19937_64 g(5);
  std::normal_distribution<double> nd;
  for (long n = 1; n <= 50; ++n) {
    a.coefficients[n] = {nd(g), nd(g)};
    if (n % 3 == 0) b.coefficients[n] = {nd(g), 0.0};
  }
  const MvhResult r = mvh_check(a, b, 100.0, 350.0);
  CHECK(r.holds);
  CHECK(std::abs(r.lhs_dev - r.quad_dev) < 1e-7 * (1.0 + r.lhs_dev));
  const auto sum = std::accumulate(a.coefficients.begin(), a.coefficients.end(), std::complex<double>{},
                                   [](auto s, const auto& kv) { return s + kv.second; });
  CHECK(std::abs(a(0.0) - sum) < 1e-12);
  a.coefficients[51] = 1.0;
  CHECK_THROWS_AS(mvh_check(a, b, 100.0, 350.0), DomainError);
}

TEST_CASE("imaginary part moments") {
  std::map<long, std::complex<double>> one{{7, {0.3, 0.4}}};
  const ImagMomentResult r1 = imag_moment_check(1, one, 0.0, 1000.0);
  CHECK(r1.lhs == doctest::Approx(r1.main).epsilon(1e-3));
  CHECK(r1.holds);
  std::map<long, std::complex<double>> two{{2, 1.0}, {3, 1.0}};
  CHECK(tuple_sum(2, two) == doctest::Approx(6.0));
  CHECK(tuple_sum(1, two) == doctest::Approx(2.0));
  std::map<long, std::complex<double>> many{{2, {1.0, 0.2}}, {3, 0.5}, {5, {0.0, -0.7}}, {7, 0.1}};
  for (int k = 1; k <= 3; ++k) CHECK(imag_moment_check(k, many, 500.0, 2500.0).holds);
  CHECK_THROWS_AS(imag_moment_check(4, many, 0.0, 1.0), KTooLarge);
  CHECK_THROWS_AS(imag_moment_check(1, {{4, 1.0}}, 0.0, 1.0), DomainError);
  std::map<long, std::complex<double>> big;
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) big[p] = 1.0;
  CHECK_THROWS_AS(imag_moment_check(1, big, 0.0, 1.0), SupportTooLarge);
}

TEST_CASE("Selberg residual") {
  const SelbergResidual r = selberg_residual(300.0, 10.0, table(), zl());
  CHECK(r.exploratory);
  CHECK(r.sigma == doctest::Approx(0.5 + 2.0 / std::log(10.0)));
  CHECK(std::isfinite(r.residual));
  CHECK(r.residual <= r.bound);
  CHECK_THROWS_AS(selberg_residual(300.0, 1.0, table(), zl()), DomainError);
}

TEST_CASE("band check") {
  const double T = 200.0, h = 0.9;
  const BandReport b = thm41_bandcheck(T, h, 0.5, 2.0, zl(), table());
  CHECK(b.holder_holds);
  // J2 <= J1^{2/3} J4^{1/3}
  CHECK(b.holder_lhs >= b.holder_rhs);
  CHECK(b.ratio2 > 0.3);
  CHECK(b.ratio2 < 3.0);
  CHECK(b.ratio4 > 0.2);
  CHECK(b.ratio4 < 5.0);
  CHECK(b.prime_prediction2 > 0.0);
}
