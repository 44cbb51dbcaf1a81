#include <cstdlib>
#include <cstring>

#include "zgap/simd.hpp"

namespace zgap::simd {

namespace {

std::optional<Backend> g_override;

Backend detect() {
  const char* env = std::getenv("ZGAP_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
  return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

}  // namespace

bool avx2_available() {
#if defined(ZGAP_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Backend active_backend() {
  if (g_override) return *g_override;
  static const Backend b = detect();
  return b;
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void set_backend_override(std::optional<Backend> b) {
  if (b == Backend::Avx2 && !avx2_available()) b = Backend::Scalar;
  g_override = b;
}

PhaseSums phase_sums(double t, double phase, std::span<const double> x, std::span<const double> w,
                     std::span<const double> phi) {
#if defined(ZGAP_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::phase_sums(t, phase, x, w, phi);
#endif
  return scalar::phase_sums(t, phase, x, w, phi);
}

double versine_sum(double h, std::span<const double> x, std::span<const double> w) {
#if defined(ZGAP_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) return avx2::versine_sum(h, x, w);
#endif
  return scalar::versine_sum(h, x, w);
}

}  // namespace zgap::simd
