#include <immintrin.h>

#include <cmath>

#include "zgap/simd.hpp"

namespace zgap::simd::avx2 {

namespace {

// Cephes sin/cos: three-part Cody-Waite reduction by pi/4, then the minimax
// polynomials on [-pi/4, pi/4].
constexpr double kFourOverPi = 1.27323954473516268615;
constexpr double kDP1 = 7.85398125648498535156e-1;
constexpr double kDP2 = 3.77489470793079817668e-8;
constexpr double kDP3 = 2.69515142907905952645e-15;

constexpr double kSinCof[] = {1.58962301576546568060e-10, -2.50507477628578072866e-8,
                              2.75573136213857245213e-6,  -1.98412698295895385996e-4,
                              8.33333333332211858878e-3,  -1.66666666666666307295e-1};
constexpr double kCosCof[] = {-1.13585365213876817300e-11, 2.08757008419747316778e-9,
                              -2.75573141792967388112e-7,  2.48015872888517045348e-5,
                              -1.38888888888730564116e-3,  4.16666666666665929218e-2};

inline __m256d set1(double v) { return _mm256_set1_pd(v); }
inline __m256d abs_pd(__m256d x) { return _mm256_andnot_pd(set1(-0.0), x); }

inline __m256d polevl(__m256d x, const double* c) {
  __m256d r = set1(c[0]);
  for (int i = 1; i < 6; ++i) r = _mm256_fmadd_pd(r, x, set1(c[i]));
  return r;
}

struct SinCos {
  __m256d s;
  __m256d c;
};

inline SinCos sincos_pd(__m256d x) {
  const __m256d sign_bit = set1(-0.0);
  __m256d ax = abs_pd(x);
  __m256d xsign = _mm256_and_pd(x, sign_bit);
  __m256d y = _mm256_floor_pd(_mm256_mul_pd(ax, set1(kFourOverPi)));
  // Round the octant up to even.
  __m256d odd = _mm256_sub_pd(y, _mm256_mul_pd(set1(2.0), _mm256_floor_pd(_mm256_mul_pd(y, set1(0.5)))));
  y = _mm256_add_pd(y, odd);
  __m256d j = _mm256_sub_pd(y, _mm256_mul_pd(set1(8.0), _mm256_floor_pd(_mm256_mul_pd(y, set1(0.125)))));

  __m256d z = _mm256_fnmadd_pd(y, set1(kDP1), ax);
  z = _mm256_fnmadd_pd(y, set1(kDP2), z);
  z = _mm256_fnmadd_pd(y, set1(kDP3), z);
  __m256d zz = _mm256_mul_pd(z, z);

  __m256d ps = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), polevl(zz, kSinCof), z);
  __m256d pc = _mm256_fmadd_pd(_mm256_mul_pd(zz, zz), polevl(zz, kCosCof),
                               _mm256_fnmadd_pd(set1(0.5), zz, set1(1.0)));

  __m256d is2 = _mm256_cmp_pd(j, set1(2.0), _CMP_EQ_OQ);
  __m256d is4 = _mm256_cmp_pd(j, set1(4.0), _CMP_EQ_OQ);
  __m256d is6 = _mm256_cmp_pd(j, set1(6.0), _CMP_EQ_OQ);
  __m256d swap = _mm256_or_pd(is2, is6);
  __m256d sin_neg = _mm256_cmp_pd(j, set1(4.0), _CMP_GE_OQ);
  __m256d cos_neg = _mm256_or_pd(is2, is4);

  SinCos r;
  r.s = _mm256_blendv_pd(ps, pc, swap);
  r.c = _mm256_blendv_pd(pc, ps, swap);
  r.s = _mm256_xor_pd(r.s, _mm256_and_pd(sin_neg, sign_bit));
  r.s = _mm256_xor_pd(r.s, xsign);
  r.c = _mm256_xor_pd(r.c, _mm256_and_pd(cos_neg, sign_bit));
  return r;
}

inline bool any_out_of_range(__m256d arg) {
  return _mm256_movemask_pd(_mm256_cmp_pd(abs_pd(arg), set1(kMaxVectorArg), _CMP_GT_OQ)) != 0;
}

SinCos sincos_checked(__m256d arg) {
  if (!any_out_of_range(arg)) return sincos_pd(arg);
  alignas(32) double a[4], s[4], c[4];
  _mm256_store_pd(a, arg);
  for (int i = 0; i < 4; ++i) {
    s[i] = std::sin(a[i]);
    c[i] = std::cos(a[i]);
  }
  return {_mm256_load_pd(s), _mm256_load_pd(c)};
}

struct Lanes {
  __m256d s = _mm256_setzero_pd();
  __m256d c = _mm256_setzero_pd();

  void add(__m256d v) {
    __m256d t = _mm256_add_pd(s, v);
    __m256d big = _mm256_cmp_pd(abs_pd(s), abs_pd(v), _CMP_GE_OQ);
    __m256d larger = _mm256_blendv_pd(v, s, big);
    __m256d smaller = _mm256_blendv_pd(s, v, big);
    c = _mm256_add_pd(c, _mm256_add_pd(_mm256_sub_pd(larger, t), smaller));
    s = t;
  }

  void drain(CompensatedSum& out) const {
    alignas(32) double a[4], b[4];
    _mm256_store_pd(a, s);
    _mm256_store_pd(b, c);
    for (double v : a) out.add(v);
    for (double v : b) out.add(v);
  }
};

}  // namespace

PhaseSums phase_sums(double t, double phase, std::span<const double> x, std::span<const double> w,
                     std::span<const double> phi) {
  const std::size_t n = x.size();
  const std::size_t nv = n - n % 4;
  Lanes lc, ls;
  const __m256d vt = set1(t), vphase = set1(phase);
  for (std::size_t i = 0; i < nv; i += 4) {
    __m256d arg = _mm256_fnmadd_pd(vt, _mm256_loadu_pd(&x[i]), vphase);
    if (!phi.empty()) arg = _mm256_add_pd(arg, _mm256_loadu_pd(&phi[i]));
    SinCos sc = sincos_checked(arg);
    __m256d vw = _mm256_loadu_pd(&w[i]);
    lc.add(_mm256_mul_pd(vw, sc.c));
    ls.add(_mm256_mul_pd(vw, sc.s));
  }
  CompensatedSum c, s;
  lc.drain(c);
  ls.drain(s);
  for (std::size_t i = nv; i < n; ++i) {
    double arg = std::fma(-t, x[i], phase);
    if (!phi.empty()) arg += phi[i];
    c.add(w[i] * std::cos(arg));
    s.add(w[i] * std::sin(arg));
  }
  return {c.value(), s.value()};
}

double versine_sum(double h, std::span<const double> x, std::span<const double> w) {
  const std::size_t n = x.size();
  const std::size_t nv = n - n % 4;
  Lanes acc;
  const __m256d vh = set1(0.5 * h);
  for (std::size_t i = 0; i < nv; i += 4) {
    __m256d sn = sincos_checked(_mm256_mul_pd(vh, _mm256_loadu_pd(&x[i]))).s;
    __m256d term = _mm256_mul_pd(_mm256_mul_pd(set1(2.0), _mm256_loadu_pd(&w[i])), _mm256_mul_pd(sn, sn));
    acc.add(term);
  }
  CompensatedSum out;
  acc.drain(out);
  for (std::size_t i = nv; i < n; ++i) {
    double sn = std::sin(0.5 * h * x[i]);
    out.add(w[i] * 2.0 * sn * sn);
  }
  return out.value();
}

}  // namespace zgap::simd::avx2
