// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 variants of the batch kernels. Same operations in the same order as
// the scalar reference; mul and add are kept separate (no FMA) so results
// are bit-identical across backends.

#include <cstddef>

#include "row_coeffs.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace swdom::kernels {

void gap_row_scalar(double, double, double, double, double, const double*, double*, std::size_t);
void reduced_score_row_scalar(double, double, double, double, double, const double*, double*,
                              std::size_t, bool);

bool avx2_available() { return __builtin_cpu_supports("avx2") != 0; }

void gap_row_avx2(double lambda, double mu, double x, double y, double u, const double* vs,
                  double* out, std::size_t n) {
  const GapRowCoeffs c = gap_row_coeffs(lambda, mu, x, y, u);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d c2a = _mm256_set1_pd(c.c2a), c2b = _mm256_set1_pd(c.c2b);
  const __m256d c3a = _mm256_set1_pd(c.c3a), c3b = _mm256_set1_pd(c.c3b);
  const __m256d a1 = _mm256_set1_pd(c.a1), a0 = _mm256_set1_pd(c.a0);
  const __m256d b1 = _mm256_set1_pd(c.b1), b0 = _mm256_set1_pd(c.b0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(vs + i);
    const __m256d m2 = _mm256_max_pd(zero, _mm256_add_pd(_mm256_mul_pd(c2a, v), c2b));
    const __m256d m3 = _mm256_max_pd(zero, _mm256_add_pd(_mm256_mul_pd(c3a, v), c3b));
    const __m256d a = _mm256_add_pd(_mm256_mul_pd(m3, a1), a0);
    const __m256d b = _mm256_add_pd(_mm256_mul_pd(m2, b1), b0);
    const __m256d lhs = _mm256_max_pd(zero, a);
    const __m256d rhs = _mm256_max_pd(zero, b);
    _mm256_storeu_pd(out + i, _mm256_sub_pd(lhs, rhs));
  }
  if (i < n) gap_row_scalar(lambda, mu, x, y, u, vs + i, out + i, n - i);
}

void reduced_score_row_avx2(double lambda, double mu, double x, double y, double u,
                            const double* ts, double* out, std::size_t n, bool b_only) {
  const ReducedRowCoeffs c = reduced_row_coeffs(lambda, mu, x, y, u);
  const __m256d yv = _mm256_set1_pd(y), w = _mm256_set1_pd(c.w);
  const __m256d pa = _mm256_set1_pd(c.pa), qa = _mm256_set1_pd(c.qa);
  const __m256d pb = _mm256_set1_pd(c.pb), qb = _mm256_set1_pd(c.qb);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_loadu_pd(ts + i);
    const __m256d vt = _mm256_add_pd(yv, _mm256_mul_pd(t, w));
    const __m256d ib = _mm256_add_pd(_mm256_mul_pd(vt, pb), qb);
    if (b_only) {
      _mm256_storeu_pd(out + i, ib);
    } else {
      const __m256d ia = _mm256_add_pd(_mm256_mul_pd(vt, pa), qa);
      _mm256_storeu_pd(out + i, _mm256_max_pd(ia, ib));
    }
  }
  if (i < n) reduced_score_row_scalar(lambda, mu, x, y, u, ts + i, out + i, n - i, b_only);
}

}  // namespace swdom::kernels

#else

namespace swdom::kernels {

bool avx2_available() { return false; }

void gap_row_avx2(double, double, double, double, double, const double*, double*, std::size_t) {}

void reduced_score_row_avx2(double, double, double, double, double, const double*, double*,
                            std::size_t, bool) {}

}  // namespace swdom::kernels

#endif
