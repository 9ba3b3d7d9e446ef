// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "swdom/tnorms.hpp"

// Shared per-row coefficient setup for the batch kernels. Every backend
// evaluates the identical expressions in the identical order; only the lane
// width differs. Built with floating-point contraction disabled so that
// scalar and SIMD results match bit for bit.

namespace swdom::kernels {

// gap(v) = max(0, m3(v)*a1 + a0) - max(0, m2(v)*b1 + b0)
//   m2(v) = max(0, c2a*v + c2b), the lambda-side inner term in (v, y)
//   m3(v) = max(0, c3a*v + c3b), the mu-side inner term in (u, v)
struct GapRowCoeffs {
  double c2a, c2b, c3a, c3b, a1, a0, b1, b0;
};

inline GapRowCoeffs gap_row_coeffs(double l, double m, double x, double y, double u) {
  const double m1 = detail::tsw(l, u, x);
  const double m4 = detail::tsw(m, x, y);
  GapRowCoeffs c;
  c.c2a = (1.0 - l) * y + l;
  c.c2b = l * (y - 1.0);
  c.c3a = (1.0 - m) * u + m;
  c.c3b = m * (u - 1.0);
  c.a1 = (1.0 - l) * m4 + l;
  c.a0 = l * (m4 - 1.0);
  c.b1 = (1.0 - m) * m1 + m;
  c.b0 = m * (m1 - 1.0);
  return c;
}

// score(t) = max(vt*pa + qa, vt*pb + qb), vt = y + t*w  (or the b part alone)
struct ReducedRowCoeffs {
  double w, pa, qa, pb, qb;
};

inline ReducedRowCoeffs reduced_row_coeffs(double l, double m, double x, double y, double u) {
  ReducedRowCoeffs c;
  c.w = (1.0 + l * y) - y;
  const double lx1 = (l - 1.0) * x + 1.0;
  c.pa = u * lx1 * (m - 1.0) + (m - 1.0) * x + 1.0;
  c.qa = u * lx1 + x - 1.0;
  c.pb = x * (1.0 - (l - 1.0) * (m - 1.0) * u * y);
  c.qb = y * ((l - 1.0) * u * y * ((m - 1.0) * x + 1.0) + u - x);
  return c;
}

}  // namespace swdom::kernels
