// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

// NEON variants for aarch64. FMAX orders signed zeros differently from x86
// maxpd, so clamping and the two-way max go through compare+select instead;
// see gap_scalar.cpp for the pinned semantics.

#include <cstddef>

#include "row_coeffs.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace swdom::kernels {

void gap_row_scalar(double, double, double, double, double, const double*, double*, std::size_t);
void reduced_score_row_scalar(double, double, double, double, double, const double*, double*,
                              std::size_t, bool);

bool neon_available() { return true; }

static inline float64x2_t sel_max(float64x2_t a, float64x2_t b) {
  // (a > b) ? a : b
  return vbslq_f64(vcgtq_f64(a, b), a, b);
}

static inline float64x2_t clamp0v(float64x2_t t) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  // (0 > t) ? 0 : t
  return vbslq_f64(vcgtq_f64(zero, t), zero, t);
}

void gap_row_neon(double lambda, double mu, double x, double y, double u, const double* vs,
                  double* out, std::size_t n) {
  const GapRowCoeffs c = gap_row_coeffs(lambda, mu, x, y, u);
  const float64x2_t c2a = vdupq_n_f64(c.c2a), c2b = vdupq_n_f64(c.c2b);
  const float64x2_t c3a = vdupq_n_f64(c.c3a), c3b = vdupq_n_f64(c.c3b);
  const float64x2_t a1 = vdupq_n_f64(c.a1), a0 = vdupq_n_f64(c.a0);
  const float64x2_t b1 = vdupq_n_f64(c.b1), b0 = vdupq_n_f64(c.b0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(vs + i);
    const float64x2_t m2 = clamp0v(vaddq_f64(vmulq_f64(c2a, v), c2b));
    const float64x2_t m3 = clamp0v(vaddq_f64(vmulq_f64(c3a, v), c3b));
    const float64x2_t a = vaddq_f64(vmulq_f64(m3, a1), a0);
    const float64x2_t b = vaddq_f64(vmulq_f64(m2, b1), b0);
    vst1q_f64(out + i, vsubq_f64(clamp0v(a), clamp0v(b)));
  }
  if (i < n) gap_row_scalar(lambda, mu, x, y, u, vs + i, out + i, n - i);
}

void reduced_score_row_neon(double lambda, double mu, double x, double y, double u,
                            const double* ts, double* out, std::size_t n, bool b_only) {
  const ReducedRowCoeffs c = reduced_row_coeffs(lambda, mu, x, y, u);
  const float64x2_t yv = vdupq_n_f64(y), w = vdupq_n_f64(c.w);
  const float64x2_t pa = vdupq_n_f64(c.pa), qa = vdupq_n_f64(c.qa);
  const float64x2_t pb = vdupq_n_f64(c.pb), qb = vdupq_n_f64(c.qb);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t t = vld1q_f64(ts + i);
    const float64x2_t vt = vaddq_f64(yv, vmulq_f64(t, w));
    const float64x2_t ib = vaddq_f64(vmulq_f64(vt, pb), qb);
    if (b_only) {
      vst1q_f64(out + i, ib);
    } else {
      const float64x2_t ia = vaddq_f64(vmulq_f64(vt, pa), qa);
      vst1q_f64(out + i, sel_max(ia, ib));
    }
  }
  if (i < n) reduced_score_row_scalar(lambda, mu, x, y, u, ts + i, out + i, n - i, b_only);
}

}  // namespace swdom::kernels

#else

namespace swdom::kernels {

bool neon_available() { return false; }

void gap_row_neon(double, double, double, double, double, const double*, double*, std::size_t) {}

void reduced_score_row_neon(double, double, double, double, double, const double*, double*,
                            std::size_t, bool) {}

}  // namespace swdom::kernels

#endif
