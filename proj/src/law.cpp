// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#include "swdom/law.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace swdom {

const double k_r_crit = 17.0 + 12.0 * std::sqrt(2.0);

std::string_view to_string(ConditionTag tag) {
  switch (tag) {
    case ConditionTag::i: return "i";
    case ConditionTag::ii: return "ii";
    case ConditionTag::iii: return "iii";
    case ConditionTag::iv: return "iv";
    case ConditionTag::v: return "v";
  }
  return "?";
}

double f_eval(double x) {
  if (!(x > 9.0)) throw std::domain_error("f_eval: domain is (9, inf)");
  const double s = std::sqrt(x);
  const double q = (1.0 - 3.0 * s) / (3.0 - s);
  return q * q;
}

double beta_of(double alpha) {
  if (!(alpha > 9.0 && alpha <= k_r_crit)) {
    throw std::domain_error("beta_of: domain is (9, 17 + 12*sqrt(2)]");
  }
  return f_eval(alpha);
}

double r_star_function(double t) {
  const double lt = std::log(t);
  return lt * lt + lt - t + 1.0;
}

double r_star() {
  // g(2) > 0 > g(10) brackets the second root; 1e-10 bisection is plenty for
  // the 6 significant digits that are ever compared.
  static const double root = [] {
    double lo = 2.0, hi = 10.0;
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      if (r_star_function(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

DominanceVerdict dominates_closed_form(ParamValue lambda, ParamValue mu) {
  const double l = lambda.value(), m = mu.value();
  if (l == 0.0) return DominanceVerdict::yes(ConditionTag::i);
  if (mu.is_infinite()) return DominanceVerdict::yes(ConditionTag::ii);
  if (l == m) return DominanceVerdict::yes(ConditionTag::iii);
  if (0.0 < l && l < m && m <= k_r_crit) return DominanceVerdict::yes(ConditionTag::iv);
  if (m > k_r_crit && lambda.is_finite() && 0.0 < l && l <= f_eval(m)) {
    return DominanceVerdict::yes(ConditionTag::v);
  }
  return DominanceVerdict::no();
}

bool dominates_equiv_form(ParamValue lambda, ParamValue mu) {
  const double l = lambda.value(), m = mu.value();
  if (l == 0.0) return true;
  if (mu.is_infinite()) return true;
  if (l == m) return true;
  if (0.0 < l && l < std::fmin(m, 1.0)) return true;
  if (0.0 < l && l < m && lambda.is_finite() && mu.is_finite()) {
    return 1.0 + std::sqrt(l * m) <= 3.0 * (std::sqrt(l) + std::sqrt(m));
  }
  return false;
}

bool sufficient_mulholland(ParamValue lambda, ParamValue mu) {
  const double l = lambda.value(), m = mu.value();
  if (l <= std::fmin(1.0, m)) return true;
  return 1.0 < l && l <= m && m <= r_star();
}

bool DominatedSet::contains(ParamValue b) const {
  switch (shape) {
    case DominatedShape::full_tail:
      return b >= alpha;
    case DominatedShape::interval_plus_infinity:
      return b.is_infinite() || (b >= alpha && b.value() <= *beta);
    case DominatedShape::self_and_infinity:
      return b == alpha || b.is_infinite();
  }
  return false;
}

DominatedSet dominated_set(ParamValue alpha) {
  if (alpha.is_finite() && alpha.value() <= 9.0) {
    return DominatedSet{alpha, DominatedShape::full_tail, std::nullopt};
  }
  if (alpha.is_finite() && alpha.value() < k_r_crit) {
    return DominatedSet{alpha, DominatedShape::interval_plus_infinity, f_eval(alpha.value())};
  }
  return DominatedSet{alpha, DominatedShape::self_and_infinity, std::nullopt};
}

OrderReport check_order_properties(std::span<const ParamValue> params) {
  const std::size_t n = params.size();
  OrderReport report;
  report.count = n;

  std::vector<char> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rel[i * n + j] = dominates_closed_form(params[i], params[j]).dominates ? 1 : 0;
    }
  }

  report.reflexive = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i * n + i]) report.reflexive = false;
  }

  report.antisymmetric = true;
  report.comparability = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i * n + j]) {
        if (rel[j * n + i] && !(params[i] == params[j])) report.antisymmetric = false;
        if (!(params[i] <= params[j])) report.comparability = false;
      }
    }
  }

  report.transitive = true;
  for (std::size_t i = 0; i < n && report.transitive; ++i) {
    for (std::size_t j = 0; j < n && report.transitive; ++j) {
      if (!rel[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[j * n + k] && !rel[i * n + k]) {
          report.transitive = false;
          report.violating_triple = {{i, j, k}};
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace swdom
