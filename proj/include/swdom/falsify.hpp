// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "swdom/param.hpp"
#include "swdom/tnorms.hpp"

namespace swdom {

struct SearchConfig {
  int grid_n = 48;          // per-axis resolution of the interior grid
  int refine_iters = 200;   // coordinate-descent sweep budget
  double tol = 1e-9;        // violation threshold: a witness needs gap < -tol
  std::uint64_t seed = 0;   // jittered multistart seed

  void validate() const;  // throws std::invalid_argument on bad fields
};

struct Point4 {
  double x = 0, y = 0, u = 0, v = 0;

  friend bool operator==(const Point4&, const Point4&) = default;
};

// A certified counterexample: a point of the open unit 4-cube with a
// strictly negative dominance gap. The stored gap is the value of
// dominance_gap re-evaluated at (x, y, u, v).
struct Witness {
  double x, y, u, v;
  double gap;
};

struct FalsifyResult {
  std::optional<Witness> witness;
  double min_gap = 0.0;  // smallest gap over all points examined
  Point4 argmin;

  bool violation_found() const { return witness.has_value(); }
};

struct GridScan {
  double min_gap;
  Point4 argmin;
};

// Minimum of the dominance gap over the interior grid {(i+1/2)/n}^4.
// Deterministic for a fixed config regardless of partitioning: ties resolve
// to the lexicographically smallest grid index. threads = 0 means automatic.
// Throws std::domain_error for lambda in {0, inf} or mu = inf, which the
// closed form decides without any search.
GridScan grid_min_gap(ParamValue lambda, ParamValue mu, const SearchConfig& cfg,
                      int threads = 0);

// Cyclic coordinate descent from `start`. Restricted to one coordinate the
// gap is piecewise linear, with breakpoints at the zeros of the inner
// bilinear forms and of the two clamped sides, so each line minimization is
// exact: the minimizer is picked from the interval bounds and those
// breakpoints. Never increases the gap; stops after refine_iters sweeps or
// when a sweep improves by less than 1e-15.
Point4 refine_witness(ParamValue lambda, ParamValue mu, Point4 start, const SearchConfig& cfg);

// Full numerical dominance check: interior grid scan, then refinement from
// the best grid cells (with seeded jitter) and from corner-ladder scans of
// the two swap-symmetry planes of the gap. Returns a Witness iff a refined
// point re-evaluates below -tol.
//
// Degenerate parameters short-circuit without search: lambda = 0, mu = inf
// and lambda = mu return NoViolationFound with min_gap 0 (dominance holds by
// the closed form). lambda = inf with mu finite also returns
// NoViolationFound: the gap of (T_D, T_SW^mu) vanishes identically on the
// open cube, so no interior witness exists.
FalsifyResult falsify(ParamValue lambda, ParamValue mu, const SearchConfig& cfg = {},
                      int threads = 0);

// The two polynomial inequalities of the reduced (max-free) formulation at
// (x, y, u, vtilde):
//   a = u((lambda-1)x + 1)((mu-1)vtilde + 1) + (mu-1)vtilde*x + vtilde + x - 1
//   b = vtilde*x(1 - (lambda-1)(mu-1)uy) + y((lambda-1)uy((mu-1)x + 1) + u - x)
struct ReducedIneqs {
  double a, b;
};

ReducedIneqs reduced_inequalities(double lambda, double mu, double x, double y, double u,
                                  double v_tilde);

// True iff the point satisfies the reduced existential system:
// 0 < x, y, u < 1, y < vtilde < 1 + lambda*y, ineqA < 0 and ineqB < 0.
// Requires finite parameters with 0 < lambda < mu.
bool reduced_violation(ParamValue lambda, ParamValue mu, double x, double y, double u,
                       double v_tilde);

struct ReducedWitness {
  double x, y, u, v_tilde;
  double ineq_a, ineq_b;
};

// Search for a reduced-system witness over (x, y, u, t) with
// vtilde = y + t*(1 + lambda*y - y), t on the interior grid, so the domain
// constraint on vtilde holds by construction; the grid scan is combined with
// plane-ladder scans and local refinement mirroring falsify. Found iff both
// inequalities drop below -tol at an examined point. With ignore_ineq_a the
// search looks for ineqB < -tol alone. Requires 0 < lambda < mu < inf.
std::optional<ReducedWitness> reduced_search(ParamValue lambda, ParamValue mu,
                                             const SearchConfig& cfg = {},
                                             bool ignore_ineq_a = false, int threads = 0);

// Back-substitution from reduced to original coordinates:
// v = (vtilde - y) / (1 + (lambda-1)y), then (1-x, 1-y, 1-u, 1-v).
// The dominance gap at the mapped point is negative for a valid witness.
// Throws std::domain_error if a mapped coordinate falls outside (0, 1)
// beyond 1e-12 slack.
Point4 map_reduced_to_raw(ParamValue lambda, ParamValue mu, const ReducedWitness& w);

// Residual of the factorization identity
//   A - B = (mu-lambda) * ((mu + lambda(1-mu))(u-1)(v-1)(x-1)(y-1)
//                          - ((u-1)y - u)((v-1)x - v) + 1)
// where A and B are the *unclamped* sides built from the raw inner terms.
// Zero up to round-off for all real inputs.
double identity_residual(double lambda, double mu, double x, double y, double u, double v);

}  // namespace swdom
