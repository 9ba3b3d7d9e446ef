// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#include <cstddef>

#include "row_coeffs.hpp"

namespace swdom::kernels {

// max(0, t) written as (0 > t) ? 0 : t, the exact semantics of x86 maxpd
// with 0 in the first operand; the NEON variant uses compare+select to
// match. Keeps all backends bit-identical, signed zeros included.
static inline double clamp0(double t) { return 0.0 > t ? 0.0 : t; }

void gap_row_scalar(double lambda, double mu, double x, double y, double u, const double* vs,
                    double* out, std::size_t n) {
  const GapRowCoeffs c = gap_row_coeffs(lambda, mu, x, y, u);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = vs[i];
    const double m2 = clamp0(c.c2a * v + c.c2b);
    const double m3 = clamp0(c.c3a * v + c.c3b);
    const double a = m3 * c.a1 + c.a0;
    const double b = m2 * c.b1 + c.b0;
    out[i] = clamp0(a) - clamp0(b);
  }
}

void reduced_score_row_scalar(double lambda, double mu, double x, double y, double u,
                              const double* ts, double* out, std::size_t n, bool b_only) {
  const ReducedRowCoeffs c = reduced_row_coeffs(lambda, mu, x, y, u);
  if (b_only) {
    for (std::size_t i = 0; i < n; ++i) {
      const double vt = y + ts[i] * c.w;
      out[i] = vt * c.pb + c.qb;
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double vt = y + ts[i] * c.w;
    const double ia = vt * c.pa + c.qa;
    const double ib = vt * c.pb + c.qb;
    out[i] = ia > ib ? ia : ib;
  }
}

}  // namespace swdom::kernels
