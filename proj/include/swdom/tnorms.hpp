// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "swdom/param.hpp"

namespace swdom {

namespace detail {

// Double-level evaluation of the family, shared by the typed API, the
// falsifier and the batch kernels so that all paths agree bit for bit.
// The operand order below is the one canonical form; do not reorder.
inline double tsw(double lambda, double a, double b) {
  if (lambda == 0.0) return a * b;
  if (std::isinf(lambda)) {
    if (a == 1.0) return b;
    if (b == 1.0) return a;
    return 0.0;
  }
  const double t = (1.0 - lambda) * (a * b) + lambda * ((a + b) - 1.0);
  return t > 0.0 ? t : 0.0;
}

inline double tnorm(TNormKind kind, double lambda, double a, double b) {
  switch (kind) {
    case TNormKind::minimum:
      return a < b ? a : b;
    case TNormKind::product:
      return a * b;
    case TNormKind::lukasiewicz: {
      const double t = (a + b) - 1.0;
      return t > 0.0 ? t : 0.0;
    }
    case TNormKind::drastic:
      if (a == 1.0) return b;
      if (b == 1.0) return a;
      return 0.0;
    case TNormKind::sugeno_weber:
      return tsw(lambda, a, b);
  }
  return 0.0;  // unreachable
}

// Unclamped bilinear form (1-p)*a*b + p*(a+b-1).
inline double bilinear(double p, double a, double b) {
  return (1.0 - p) * (a * b) + p * ((a + b) - 1.0);
}

}  // namespace detail

// T_SW^lambda(u, v): product at lambda = 0, drastic product at lambda = inf,
// max(0, (1-lambda)uv + lambda(u+v-1)) in between.
UnitValue tsw_eval(ParamValue lambda, UnitValue u, UnitValue v);

UnitValue tnorm_eval(const TNormId& id, UnitValue u, UnitValue v);

// Classification of a family member by its parameter.
enum class FamilyClass { strict, nilpotent, not_continuous };

FamilyClass family_class(ParamValue lambda);

// The four unclamped bilinear forms entering the dominance inequality for
// the pair (T_SW^lambda, T_SW^mu) at the point (x, y, u, v):
//   x1 = (1-lambda)ux + lambda(u+x-1)    x2 = (1-lambda)vy + lambda(v+y-1)
//   x3 = (1-mu)uv + mu(u+v-1)            x4 = (1-mu)xy + mu(x+y-1)
struct InnerTerms {
  double x1, x2, x3, x4;
};

// Requires finite lambda and mu.
InnerTerms inner_terms(ParamValue lambda, ParamValue mu, UnitValue x, UnitValue y, UnitValue u,
                       UnitValue v);

// The two sides of the dominance inequality before the outer clamp:
//   a = (1-lambda)m3*m4 + lambda(m3+m4-1) with m_i = max(0, x_i)
//   b = (1-mu)m1*m2 + mu(m1+m2-1)
// max(0, a) is the left side of the inequality and max(0, b) the right side.
struct SideValues {
  double a, b;
};

SideValues sides_ab(ParamValue lambda, ParamValue mu, UnitValue x, UnitValue y, UnitValue u,
                    UnitValue v);

// T1(T2(x,y), T2(u,v)) - T2(T1(x,u), T1(y,v)); nonnegative everywhere iff T1
// dominates T2. A strictly negative value is a counterexample certificate.
double dominance_gap(const TNormId& t1, const TNormId& t2, UnitValue x, UnitValue y, UnitValue u,
                     UnitValue v);

}  // namespace swdom
