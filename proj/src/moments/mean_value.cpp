#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <unordered_map>
#include <vector>

#include "zgap/constants.hpp"
#include "zgap/moments.hpp"
#include "zgap/simd.hpp"
#include "gauss_rule.hpp"

namespace zgap::moments {

namespace {

using Complex = std::complex<double>;

// Integral of e^{i w t} over [T1, T2].
Complex exp_integral(double w, double T1, double T2) {
  const double L = T2 - T1;
  if (w == 0.0) return {L, 0.0};
  const double c = 0.5 * (T1 + T2);
  return std::polar(2.0 * std::sin(0.5 * w * L) / w, w * c);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

double m0() { return constants::m0().mid_double(); }

struct Split {
  std::vector<double> x, w, phi;
};

Split polar_split(const DirichletPoly& p) {
  Split s;
  for (const auto& [n, a] : p.coefficients) {
    s.x.push_back(std::log(static_cast<double>(n)));
    s.w.push_back(std::abs(a));
    s.phi.push_back(std::arg(a));
  }
  return s;
}

}  // namespace

Complex DirichletPoly::operator()(double t) const {
  const Split s = polar_split(*this);
  const simd::PhaseSums ps = simd::phase_sums(t, 0.0, s.x, s.w, s.phi);
  return {ps.cos_sum, ps.sin_sum};
}

double DirichletPoly::weighted_norm() const {
  double s = 0.0;
  for (const auto& [n, a] : coefficients) s += static_cast<double>(n) * std::norm(a);
  return s;
}

MvhResult mvh_check(const DirichletPoly& a, const DirichletPoly& b, double T1, double T2) {
  if (!(T2 > T1)) throw DomainError("mvh_check requires T1 < T2");
  for (const auto* p : {&a, &b})
    for (const auto& [n, c] : p->coefficients)
      if (n < 1 || n > p->cutoff) throw DomainError("Dirichlet coefficient index outside [1, cutoff]");

  MvhResult r;
  // f conj(g) = sum a_n conj(b_m) e^{i t log(m/n)}; the n = m terms give the main term.
  Complex dev(0.0, 0.0), diag(0.0, 0.0);
  for (const auto& [n, an] : a.coefficients) {
    for (const auto& [m, bm] : b.coefficients) {
      const Complex c = an * std::conj(bm);
      if (n == m) {
        diag += c;
        continue;
      }
      dev += c * exp_integral(std::log(static_cast<double>(m) / static_cast<double>(n)), T1, T2);
    }
  }
  r.lhs_dev = std::abs(dev);

  // Gauss-Legendre, each panel spanning a few radians of the fastest term.
  const long X = std::max(a.cutoff, b.cutoff);
  const double wmax = 2.0 * std::log(static_cast<double>(std::max(2L, X)));
  const long panels = std::max(1L, static_cast<long>(std::ceil((T2 - T1) * wmax / 8.0)));
  const auto& rule = detail::gauss_rule<20>();
  const Split sa = polar_split(a), sb = polar_split(b);
  Complex quad(0.0, 0.0);
  const double half = 0.5 * (T2 - T1) / static_cast<double>(panels);
  for (long i = 0; i < panels; ++i) {
    const double mid = T1 + half * (2.0 * static_cast<double>(i) + 1.0);
    for (std::size_t j = 0; j < rule.x.size(); ++j) {
      const double t = mid + half * rule.x[j];
      const simd::PhaseSums fa = simd::phase_sums(t, 0.0, sa.x, sa.w, sa.phi);
      const simd::PhaseSums fb = simd::phase_sums(t, 0.0, sb.x, sb.w, sb.phi);
      quad += half * rule.w[j] * Complex(fa.cos_sum, fa.sin_sum) * Complex(fb.cos_sum, -fb.sin_sum);
    }
  }
  r.quad_dev = std::abs(quad - (T2 - T1) * diag);

  r.rhs = 3.0 * std::numbers::pi * m0() * std::sqrt(a.weighted_norm()) * std::sqrt(b.weighted_norm());
  r.holds = r.lhs_dev <= r.rhs;
  return r;
}

double tuple_sum(int k, const std::map<long, Complex>& coeffs) {
  if (k < 1 || k > kMaxImagK) throw KTooLarge("tuple_sum supports 1 <= k <= 3");
  std::vector<double> mag;
  for (const auto& [p, a] : coeffs) mag.push_back(std::norm(a));
  const std::size_t m = mag.size();
  if (m == 0) return 0.0;
  double total = 0.0;
  std::vector<std::size_t> idx(k, 0);
  const double kfact = std::tgamma(k + 1.0);
  while (true) {
    double w = 1.0;
    std::vector<std::size_t> sorted(idx);
    std::sort(sorted.begin(), sorted.end());
    double perms = kfact;
    for (std::size_t i = 0, run = 1; i < sorted.size(); ++i) {
      w *= mag[sorted[i]];
      if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) {
        ++run;
      } else {
        perms /= std::tgamma(static_cast<double>(run) + 1.0);
        run = 1;
      }
    }
    total += w * perms;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == m) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return total;
}

ImagMomentResult imag_moment_check(int k, const std::map<long, Complex>& coeffs, double T1, double T2) {
  if (k < 1 || k > kMaxImagK) throw KTooLarge("imag_moment_check supports 1 <= k <= 3");
  if (coeffs.size() > kMaxImagSupport) throw SupportTooLarge("imag_moment_check supports at most 12 primes");
  if (!(T2 > T1)) throw DomainError("imag_moment_check requires T1 < T2");

  std::vector<double> logp;
  std::vector<Complex> a;
  for (const auto& [p, c] : coeffs) {
    if (!is_prime(p)) throw DomainError("imag_moment_check: index " + std::to_string(p) + " is not prime");
    logp.push_back(std::log(static_cast<double>(p)));
    a.push_back(c);
  }

  // Im sum a_p e^{-it log p} = sum_p (a_p e^{-i t log p} - conj(a_p) e^{i t log p}) / 2i.
  // Monomials are keyed by their exponent vector, 4 bits per prime with bias 8;
  // exponents stay within [-6, 6].
  using Poly = std::unordered_map<std::uint64_t, Complex>;
  constexpr std::uint64_t kBias = 0x8888888888888888ULL >> 16;  // 12 nibbles of 8
  const Complex inv2i(0.0, -0.5);
  std::vector<std::pair<std::uint64_t, Complex>> base;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const std::uint64_t unit = std::uint64_t{1} << (4 * j);
    base.emplace_back(kBias - unit, a[j] * inv2i);
    base.emplace_back(kBias + unit, -std::conj(a[j]) * inv2i);
  }
  // P = f^k; the integral of f^{2k} = P * P is then summed over pairs of
  // monomials with the closed form of each pair's integral.
  Poly acc;
  acc[kBias] = 1.0;
  for (int step = 0; step < k; ++step) {
    Poly next;
    for (const auto& [key, c] : acc)
      for (const auto& [bk, bc] : base) next[key + bk - kBias] += c * bc;
    acc.swap(next);
  }
  // Key order keeps the summation independent of hash iteration order.
  std::vector<std::pair<std::uint64_t, Complex>> terms(acc.begin(), acc.end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  const std::size_t m = terms.size();
  const double L = T2 - T1, mid = 0.5 * (T1 + T2);
  std::vector<double> w(m), sn(m), cs(m);
  std::vector<Complex> coef(m);
  for (std::size_t i = 0; i < m; ++i) {
    double wi = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const long e = static_cast<long>((terms[i].first >> (4 * j)) & 0xF) - 8;
      wi += static_cast<double>(e) * logp[j];
    }
    // e^{-i t log p} carries exponent -1, so each monomial is e^{i w t}.
    w[i] = wi;
    sn[i] = std::sin(0.5 * wi * L);
    cs[i] = std::cos(0.5 * wi * L);
    coef[i] = terms[i].second * std::polar(1.0, wi * mid);
  }
  Complex lhs(0.0, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    Complex row(0.0, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      if (terms[i].first + terms[j].first == 2 * kBias) {
        row += coef[j] * L;
        continue;
      }
      // integral of e^{i(w_i + w_j)t} = e^{i(w_i + w_j) mid} 2 sin((w_i + w_j) L/2)/(w_i + w_j)
      const double s2 = sn[i] * cs[j] + cs[i] * sn[j];
      row += coef[j] * (2.0 * s2 / (w[i] + w[j]));
    }
    lhs += coef[i] * row;
  }

  ImagMomentResult r;
  r.lhs = lhs.real();
  double binom = 1.0;
  for (int i = 1; i <= k; ++i) binom = binom * (k + i) / i;
  r.main = (T2 - T1) / std::pow(4.0, k) * binom * tuple_sum(k, coeffs);
  double norm = 0.0;
  for (const auto& [p, c] : coeffs) norm += static_cast<double>(p) * std::norm(c);
  r.error_bound = constants::eval_C1(k).exact.mid_double() * std::pow(norm, k);
  r.holds = std::abs(r.lhs - r.main) <= r.error_bound;
  return r;
}

}  // namespace zgap::moments
