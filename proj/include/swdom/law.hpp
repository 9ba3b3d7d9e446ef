// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "swdom/param.hpp"

namespace swdom {

// Tags for the five conditions of the dominance characterization, in the
// order they are tested:
//   (i)   lambda = 0
//   (ii)  mu = inf
//   (iii) lambda = mu
//   (iv)  0 < lambda < mu <= 17 + 12*sqrt(2)
//   (v)   mu > 17 + 12*sqrt(2) and 0 < lambda <= f(mu)
enum class ConditionTag { i, ii, iii, iv, v };

std::string_view to_string(ConditionTag tag);

struct DominanceVerdict {
  bool dominates = false;
  std::optional<ConditionTag> condition;  // engaged exactly when dominates

  static DominanceVerdict yes(ConditionTag tag) { return {true, tag}; }
  static DominanceVerdict no() { return {false, std::nullopt}; }
};

// 17 + 12*sqrt(2), the fixpoint of f and the threshold between conditions
// (iv) and (v). Stored as the correctly rounded double; comparisons against
// it are exact, with no epsilon slack.
extern const double k_r_crit;

// The boundary involution f(x) = ((1 - 3*sqrt(x)) / (3 - sqrt(x)))^2 on
// (9, inf). Strictly decreasing, involutive, with fixpoint 17 + 12*sqrt(2).
// Throws std::domain_error for x <= 9.
double f_eval(double x);

// beta_alpha = f(alpha) for alpha in (9, 17 + 12*sqrt(2)]; throws outside.
double beta_of(double alpha);

// g(t) = ln(t)^2 + ln(t) - t + 1, whose second root r* bounds the
// Mulholland-derived sufficient condition.
double r_star_function(double t);

// The root of g in (1, inf), computed once by bisection on [2, 10] to an
// absolute tolerance of 1e-10.
double r_star();

// Closed-form dominance decision for (T_SW^lambda, T_SW^mu). Conditions are
// tested in order (i) through (v) and the first match is reported, so
// overlapping cases resolve deterministically. The boundary lambda = f(mu)
// of condition (v) is inclusive.
DominanceVerdict dominates_closed_form(ParamValue lambda, ParamValue mu);

// Equivalent characterization with (iv) as 0 < lambda < min(mu, 1) and (v)
// as 0 < lambda < mu and 1 + sqrt(lambda*mu) <= 3*(sqrt(lambda)+sqrt(mu)).
// Coded independently of dominates_closed_form as a cross-check.
bool dominates_equiv_form(ParamValue lambda, ParamValue mu);

// Sufficient (not necessary) condition derived from the generalized
// Mulholland inequality: lambda <= min(1, mu), or 1 < lambda <= mu <= r*.
bool sufficient_mulholland(ParamValue lambda, ParamValue mu);

enum class DominatedShape {
  full_tail,               // [alpha, inf], for alpha in [0, 9]
  interval_plus_infinity,  // [alpha, f(alpha)] plus {inf}, for alpha in (9, r_crit)
  self_and_infinity,       // {alpha, inf}, for alpha >= r_crit
};

// Description of D_alpha = { beta : T_SW^alpha dominates T_SW^beta }.
struct DominatedSet {
  ParamValue alpha;
  DominatedShape shape;
  std::optional<double> beta;  // f(alpha), engaged for interval_plus_infinity

  bool contains(ParamValue b) const;
};

DominatedSet dominated_set(ParamValue alpha);

// Order-property report for the closed-form relation restricted to a finite
// parameter set. On a correct implementation all four properties hold for
// any input; a violating transitivity triple, were one found, is reported
// as indices into the input.
struct OrderReport {
  std::size_t count = 0;
  bool reflexive = false;
  bool antisymmetric = false;
  bool transitive = false;
  bool comparability = false;  // dominates(a, b) implies a <= b
  std::optional<std::array<std::size_t, 3>> violating_triple;

  bool all_hold() const { return reflexive && antisymmetric && transitive && comparability; }
};

OrderReport check_order_properties(std::span<const ParamValue> params);

}  // namespace swdom
