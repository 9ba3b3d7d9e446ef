// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swdom/law.hpp"

namespace swdom {

enum class Scale { linear, log };
enum class ExportFormat { csv, json };

// Rectangular sampling of the solution set S = {(lambda, mu) : T_SW^lambda
// dominates T_SW^mu}. Cells are stored row-major: lambda index outer, mu
// index inner.
struct RegionGrid {
  struct Cell {
    bool dominates = false;
    std::optional<ConditionTag> condition;

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  std::vector<double> lambdas;  // strictly increasing
  std::vector<double> mus;      // strictly increasing
  std::vector<Cell> cells;      // lambdas.size() * mus.size()

  const Cell& at(std::size_t i, std::size_t j) const { return cells[i * mus.size() + j]; }
};

// n x n grid of closed-form verdicts over the given parameter ranges.
// Each range requires 0 <= lo < hi < inf (lo > 0 for log spacing); n >= 2.
RegionGrid sample_region(std::pair<double, double> lambda_range,
                         std::pair<double, double> mu_range, int n, Scale scale);

// Samples (mu_k, f(mu_k)) of the dominance boundary, mu_k log-spaced in
// [mu_lo, mu_hi]. Requires 17 + 12*sqrt(2) < mu_lo < mu_hi and n >= 2.
struct BoundaryCurve {
  struct Sample {
    double mu;
    double lambda;  // f(mu)
  };
  std::vector<Sample> samples;
};

BoundaryCurve boundary_curve(double mu_lo, double mu_hi, int n);

inline constexpr std::string_view k_generator_version = "0.1.0";

// CSV layout: header "lambda,mu,dominates,condition", one row per cell in
// row-major order, numbers with 17 significant digits so doubles round-trip
// exactly; condition column carries the roman-numeral tag, empty when not
// dominating.
void export_csv(const RegionGrid& grid, std::ostream& os);
void export_json(const RegionGrid& grid, std::ostream& os);

// Curve rows are "lambda,mu" pairs with strictly decreasing lambda.
void export_csv(const BoundaryCurve& curve, std::ostream& os);
void export_json(const BoundaryCurve& curve, std::ostream& os);

// Re-parses a CSV produced by export_csv; used to verify round-trips.
RegionGrid parse_region_csv(std::istream& is);

}  // namespace swdom
