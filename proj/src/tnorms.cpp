// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#include "swdom/tnorms.hpp"

#include <stdexcept>

namespace swdom {

UnitValue tsw_eval(ParamValue lambda, UnitValue u, UnitValue v) {
  return UnitValue(detail::tsw(lambda.value(), u.value(), v.value()));
}

UnitValue tnorm_eval(const TNormId& id, UnitValue u, UnitValue v) {
  const double lambda = id.kind() == TNormKind::sugeno_weber ? id.lambda().value() : 0.0;
  return UnitValue(detail::tnorm(id.kind(), lambda, u.value(), v.value()));
}

FamilyClass family_class(ParamValue lambda) {
  if (lambda.is_infinite()) return FamilyClass::not_continuous;
  if (lambda.value() == 0.0) return FamilyClass::strict;
  return FamilyClass::nilpotent;
}

InnerTerms inner_terms(ParamValue lambda, ParamValue mu, UnitValue x, UnitValue y, UnitValue u,
                       UnitValue v) {
  if (!lambda.is_finite() || !mu.is_finite()) {
    throw std::domain_error("inner_terms: parameters must be finite");
  }
  const double l = lambda.value(), m = mu.value();
  const double xv = x.value(), yv = y.value(), uv = u.value(), vv = v.value();
  return InnerTerms{
      detail::bilinear(l, uv, xv),
      detail::bilinear(l, vv, yv),
      detail::bilinear(m, uv, vv),
      detail::bilinear(m, xv, yv),
  };
}

SideValues sides_ab(ParamValue lambda, ParamValue mu, UnitValue x, UnitValue y, UnitValue u,
                    UnitValue v) {
  const InnerTerms t = inner_terms(lambda, mu, x, y, u, v);
  const double m1 = t.x1 > 0.0 ? t.x1 : 0.0;
  const double m2 = t.x2 > 0.0 ? t.x2 : 0.0;
  const double m3 = t.x3 > 0.0 ? t.x3 : 0.0;
  const double m4 = t.x4 > 0.0 ? t.x4 : 0.0;
  return SideValues{
      detail::bilinear(lambda.value(), m3, m4),
      detail::bilinear(mu.value(), m1, m2),
  };
}

double dominance_gap(const TNormId& t1, const TNormId& t2, UnitValue x, UnitValue y, UnitValue u,
                     UnitValue v) {
  const double l1 = t1.kind() == TNormKind::sugeno_weber ? t1.lambda().value() : 0.0;
  const double l2 = t2.kind() == TNormKind::sugeno_weber ? t2.lambda().value() : 0.0;
  const double xv = x.value(), yv = y.value(), uv = u.value(), vv = v.value();
  const double inner_xy = detail::tnorm(t2.kind(), l2, xv, yv);
  const double inner_uv = detail::tnorm(t2.kind(), l2, uv, vv);
  const double lhs = detail::tnorm(t1.kind(), l1, inner_xy, inner_uv);
  const double inner_xu = detail::tnorm(t1.kind(), l1, xv, uv);
  const double inner_yv = detail::tnorm(t1.kind(), l1, yv, vv);
  const double rhs = detail::tnorm(t2.kind(), l2, inner_xu, inner_yv);
  return lhs - rhs;
}

}  // namespace swdom
