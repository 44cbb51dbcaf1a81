#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "zgap/errors.hpp"
#include "zgap/primes.hpp"
#include "zgap/zeros.hpp"

namespace zgap::moments {

struct DirichletPoly {
  std::map<long, std::complex<double>> coefficients;  // n -> a_n, 1 <= n <= cutoff
  long cutoff = 0;

  // sum a_n n^{-it}
  std::complex<double> operator()(double t) const;
  double weighted_norm() const;  // sum n |a_n|^2
};

struct MomentEstimate {
  int n = 0;
  double T = 0.0;
  double h = 0.0;
  double value = 0.0;       // integral over [T, 2T] of |S(t+h) - S(t)|^n
  double quad_error = 0.0;  // sum over pieces of |G_q - G_7|
  double main_term = 0.0;   // zero for odd n
  double ratio = 0.0;       // value / main_term, NaN when main_term is zero
  long pieces = 0;
};

// (2k)!/(2^k pi^{2k} k!) T log^k(2 + h log T) for n = 2k, zero for odd n.
double moment_main_term(int n, double T, double h);

// All requested powers from one partition of [T, 2T] at {gamma} and
// {gamma - h} (and at sign changes of the integrand), Gauss rule of order
// quad_points (7, 15, 20 or 30) per piece.
inline constexpr int kDefaultQuadPoints = 15;
std::vector<MomentEstimate> moment_J(std::span<const int> powers, double T, double h, const zeros::ZeroList& zl,
                                     int quad_points = kDefaultQuadPoints);
MomentEstimate moment_J(int n, double T, double h, const zeros::ZeroList& zl, int quad_points = kDefaultQuadPoints);

// S(t+h) - S(t) = #{gamma in (t, t+h]} - (theta(t+h) - theta(t))/pi.
double delta_S(double t, double h, const zeros::ZeroList& zl);
// S(t) = N(t) - theta(t)/pi - 1 from the zero list.
double s_from_zeros(double t, const zeros::ZeroList& zl);

// (1/pi) sum_{p <= T^{eps/k}} Im{p^{-1/2}(p^{-ih} - 1) p^{-it}}
double dirichlet_P(int k, double t, double h, double T, double eps, const primes::PrimeTable& table);
// S(t) + (1/pi) sum_{p <= T^{eps/k}} sin(t log p)/sqrt(p)
double dirichlet_Q(int k, double t, double T, double eps, const primes::PrimeTable& table,
                   const zeros::ZeroList& zl);

struct SelbergResidual {
  double residual = 0.0;
  double bound = 0.0;
  double sigma = 0.0;
  bool exploratory = true;  // x0 >= e^16 relaxed to x0 = x
};

SelbergResidual selberg_residual(double t, double x, const primes::PrimeTable& table, const zeros::ZeroList& zl);

struct MvhResult {
  double lhs_dev = 0.0;   // exact termwise integration
  double quad_dev = 0.0;  // Gauss-Legendre cross-check of the same deviation
  double rhs = 0.0;
  bool holds = false;
};

MvhResult mvh_check(const DirichletPoly& a, const DirichletPoly& b, double T1, double T2);

inline constexpr std::size_t kMaxImagSupport = 12;
inline constexpr int kMaxImagK = 3;

struct ImagMomentResult {
  double lhs = 0.0;
  double main = 0.0;
  double error_bound = 0.0;
  bool holds = false;
};

// Integral of (Im sum_p a_p p^{-it})^{2k} against its main term.
ImagMomentResult imag_moment_check(int k, const std::map<long, std::complex<double>>& coeffs, double T1, double T2);
// sum over ordered k-tuples of |a_p|^2 times the number of distinct permutations.
double tuple_sum(int k, const std::map<long, std::complex<double>>& coeffs);

struct BandReport {
  double T = 0.0;
  double h = 0.0;
  double alpha = 0.0;
  double eps = 0.0;
  MomentEstimate J1, J2, J4;
  double main2 = 0.0;  // (T/pi^2) log(alpha + h log T)
  double main4 = 0.0;  // (3T/pi^4) log^2(alpha + h log T)
  double dev2 = 0.0;
  double dev4 = 0.0;
  double ratio2 = 0.0;  // against the alpha = 2 main terms
  double ratio4 = 0.0;
  double prime_prediction2 = 0.0;  // (T/pi^2) sum_{p <= T^eps} (1 - cos(h log p))/p
  double holder_lhs = 0.0;         // J1
  double holder_rhs = 0.0;         // sqrt(J2^3 / J4)
  bool holder_holds = false;
};

BandReport thm41_bandcheck(double T, double h, double eps, double alpha, const zeros::ZeroList& zl,
                           const primes::PrimeTable& table, int quad_points = kDefaultQuadPoints);

}  // namespace zgap::moments
