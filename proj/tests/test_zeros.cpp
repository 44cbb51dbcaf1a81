#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "zgap/errors.hpp"
#include "zgap/zeros.hpp"

using namespace zgap;
using namespace zgap::zeros;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const ZeroList& low_zeros() {
  static const ZeroList zl = isolate_zeros(10.0, 260.0);
  return zl;
}

ZeroList synthetic(std::vector<double> gammas, double t_min, double t_max) {
  ZeroList zl;
  zl.t_min = t_min;
  zl.t_max = t_max;
  for (double g : gammas) zl.ordinates.push_back({g, 0.0});
  return zl;
}

}  // namespace

TEST_CASE("isolation matches the known ordinates") {
  const ZeroList& zl = low_zeros();
  CHECK(zl.count_certified);
  CHECK(zl.count_below == 0);
  // mpmath nzeros(260)
  CHECK(zl.size() == 114);
  CHECK(std::abs(zl.ordinates[0].gamma - 14.134725141734693790) < 1e-8);
  CHECK(std::abs(zl.ordinates[1].gamma - 21.022039638771554993) < 1e-8);
  for (const auto& o : zl.ordinates) CHECK(o.radius <= kDefaultRadius);
  CHECK(zl.count_upto(100.0) == 29);
  CHECK(zl.count_in(14.0, 22.0) == 2);
  CHECK(zl.index_of(0) == 1);
  CHECK_THROWS_AS(isolate_zeros(5.0, 20.0), DomainError);
}

TEST_CASE("restrict keeps global indices") {
  const ZeroList r = restrict(low_zeros(), 100.0, 200.0);
  CHECK(r.count_below == 29);
  CHECK(r.size() == static_cast<std::size_t>(low_zeros().count_in(100.0, 200.0)));
  CHECK(r.ordinates.front().gamma > 100.0);
  CHECK(r.ordinates.back().gamma <= 200.0);
  CHECK(r.index_of(0) == 30);
}

TEST_CASE("CSV round trip") {
  const ZeroList& zl = low_zeros();
  std::stringstream ss;
  write_csv(zl, ss);
  const std::string text = ss.str();
  CHECK(text.rfind("# t_min=", 0) == 0);
  CHECK(text.find("\nindex,gamma,radius\n") != std::string::npos);
  const ZeroList back = read_csv(ss);
  CHECK(back.t_min == zl.t_min);
  CHECK(back.t_max == zl.t_max);
  CHECK(back.count_below == zl.count_below);
  CHECK(back.count_certified == zl.count_certified);
  REQUIRE(back.size() == zl.size());
  for (std::size_t i = 0; i < zl.size(); ++i) {
    CHECK(back.ordinates[i].gamma == zl.ordinates[i].gamma);
    CHECK(back.ordinates[i].radius == zl.ordinates[i].radius);
  }
  std::istringstream bad("index,gamma,radius\n1,abc,0\n");
  CHECK_THROWS(read_csv(bad));
}

TEST_CASE("gap statistics") {
  const ZeroList& zl = low_zeros();
  const std::vector<double> alphas{0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 100.0};
  const GapStats g = gap_statistics(zl, alphas);
  CHECK(g.gap_count == zl.size() - 1);
  CHECK(g.max_gap_index == 1);
  CHECK(g.max_gap == doctest::Approx(21.022039638771554993 - 14.134725141734693790).epsilon(1e-9));
  CHECK(g.mean_gap == doctest::Approx((zl.ordinates.back().gamma - zl.ordinates.front().gamma) / g.gap_count));
  double prev = -1.0;
  for (double a : alphas) {
    const double d = g.d_of_alpha.at(a);
    CHECK(d >= prev);
    CHECK(d == doctest::Approx(d_of_alpha_direct(zl, a)));
    prev = d;
  }
  CHECK(g.d_of_alpha.at(0.0) == 0.0);
  CHECK(g.d_of_alpha.at(100.0) == 1.0);
  CHECK_THROWS_AS(gap_statistics(synthetic({20.0}, 10, 30), alphas), TooFewZeros);
}

TEST_CASE("normalized gaps on a synthetic list") {
  const ZeroList zl = synthetic({100.0, 101.0, 103.0}, 50, 200);
  const std::vector<double> none;
  const GapStats g = gap_statistics(zl, none);
  CHECK(g.normalized_gaps[0] == doctest::Approx(std::log(100.0 / kTwoPi) / kTwoPi));
  CHECK(g.normalized_gaps[1] == doctest::Approx(2.0 * std::log(101.0 / kTwoPi) / kTwoPi));
  CHECK(g.max_normalized_index == 2);
  CHECK(g.mean_normalized_gap_log_gamma > g.mean_normalized_gap);
}

TEST_CASE("discrepancy") {
  const ZeroList zl = synthetic({100.0, 100.5, 103.0}, 50, 200);
  const double T = std::exp(kTwoPi);  // window width is lambda
  CHECK(discrepancy_delta(99.0, 2.0, T, zl) == doctest::Approx(0.0));
  CHECK(discrepancy_delta(99.0, 1.0, T, zl) == doctest::Approx(0.0));
  CHECK(discrepancy_delta(100.2, 1.0, T, zl) == doctest::Approx(0.0));
  CHECK(discrepancy_delta(101.0, 1.0, T, zl) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(discrepancy_delta(100.0, 1.0, T, zl), TooCloseToZero);
}

TEST_CASE("zero-free measure from gap geometry") {
  // Window w = 1 at T = e^{2 pi}; interval [T, 2T] is [535.49, 1070.98].
  const double T = std::exp(kTwoPi);
  const ZeroList empty = synthetic({}, 500, 1100);
  CHECK(zero_free_measure(T, 1.0, empty) == doctest::Approx(T));
  const ZeroList one = synthetic({600.0}, 500, 1100);
  CHECK(zero_free_measure(T, 1.0, one) == doctest::Approx(T - 1.0));
  const ZeroList close = synthetic({600.0, 600.4}, 500, 1100);
  CHECK(zero_free_measure(T, 1.0, close) == doctest::Approx(T - 1.4));
  CHECK(zero_free_measure(T, 0.0, close) == doctest::Approx(T));
  CHECK_THROWS_AS(zero_free_measure(T, 1.0, synthetic({}, 600, 1100)), OutOfRange);
}

TEST_CASE("zero-free measure against a grid scan") {
  const ZeroList& zl = low_zeros();
  const double T = 100.0, lambda = 1.0;
  const double w = kTwoPi * lambda / std::log(T);
  const double exact = zero_free_measure(T, lambda, zl);
  const int cells = 200000;
  const double cell = T / cells;
  long good = 0;
  for (int i = 0; i < cells; ++i) {
    const double t = T + (i + 0.5) * cell;
    if (zl.count_in(t, t + w) == 0) ++good;
  }
  // Each boundary of the good set can misclassify at most one cell.
  const long boundaries = 2 * (zl.count_in(T, 2 * T + w) + 1);
  CHECK(std::abs(exact - good * cell) <= boundaries * cell);
}

TEST_CASE("Korolev sum") {
  const ZeroList& zl = low_zeros();
  const KorolevResult r = korolev_sum(200.0, zl);
  double s = 0.0;
  long terms = 0;
  for (std::size_t i = 0; i + 1 < zl.size(); ++i) {
    if (zl.ordinates[i].gamma < 100.0 || zl.ordinates[i].gamma > 200.0) continue;
    const double g = zl.ordinates[i + 1].gamma - zl.ordinates[i].gamma;
    s += g * g;
    ++terms;
  }
  CHECK(r.terms == terms);
  CHECK(r.sum == doctest::Approx(s).epsilon(1e-14));
  CHECK(r.holds);
  CHECK(korolev_sum(120.0, zl, KorolevRange::T_TO_2T).holds);
  CHECK_THROWS_AS(korolev_sum(300.0, zl), OutOfRange);
}

TEST_CASE("sigma_xt") {
  const double x = 100.0;
  const std::vector<OffLineZero> none;
  CHECK(sigma_xt(x, 500.0, none) == doctest::Approx(0.5 + 2.0 / std::log(x)));
  // An off-line zero within reach raises sigma to 1/2 + 2|beta - 1/2|.
  const std::vector<OffLineZero> off{{0.75, 500.0}};
  CHECK(sigma_xt(x, 500.0, off) == doctest::Approx(1.0));
  // Reach is x^{3/4}/log x = 6.87; a zero 10 away is ignored.
  CHECK(sigma_xt(x, 510.0, off) == doctest::Approx(0.5 + 2.0 / std::log(x)));
  CHECK(sigma_xt(10.0, 100.0, low_zeros()) == doctest::Approx(0.5 + 2.0 / std::log(10.0)));
  CHECK_THROWS_AS(sigma_xt(1.0, 100.0, none), DomainError);
}
