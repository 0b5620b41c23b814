#include "pilab/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace pilab::kernels::detail {

#if defined(__AVX2__)

namespace {

constexpr double kP = static_cast<double>(modulus);
constexpr double kInvP = 1.0 / static_cast<double>(modulus);

inline __m256d reduce4(__m256d r, __m256d p, __m256d inv_p, __m256d zero) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(r, inv_p));
  r = _mm256_sub_pd(r, _mm256_mul_pd(q, p));
  const __m256d neg = _mm256_cmp_pd(r, zero, _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, p));
  const __m256d big = _mm256_cmp_pd(r, p, _CMP_GE_OQ);
  return _mm256_sub_pd(r, _mm256_and_pd(big, p));
}

inline double reduce1(double r) {
  const double q = __builtin_floor(r * kInvP);
  r -= q * kP;
  if (r < 0) r += kP;
  if (r >= kP) r -= kP;
  return r;
}

}  // namespace

void submul_mod_avx2(double* y, const double* x, double c, std::size_t n) {
  const __m256d p = _mm256_set1_pd(kP);
  const __m256d inv_p = _mm256_set1_pd(kInvP);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d cv = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yv = _mm256_loadu_pd(y + i);
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d r = _mm256_sub_pd(yv, _mm256_mul_pd(cv, xv));
    _mm256_storeu_pd(y + i, reduce4(r, p, inv_p, zero));
  }
  for (; i < n; ++i) y[i] = reduce1(y[i] - c * x[i]);
}

void scale_mod_avx2(double* y, double c, std::size_t n) {
  const __m256d p = _mm256_set1_pd(kP);
  const __m256d inv_p = _mm256_set1_pd(kInvP);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d cv = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, reduce4(_mm256_mul_pd(cv, yv), p, inv_p, zero));
  }
  for (; i < n; ++i) y[i] = reduce1(c * y[i]);
}

#else

void submul_mod_avx2(double* y, const double* x, double c, std::size_t n) {
  submul_mod_scalar(y, x, c, n);
}

void scale_mod_avx2(double* y, double c, std::size_t n) { scale_mod_scalar(y, c, n); }

#endif

}  // namespace pilab::kernels::detail
