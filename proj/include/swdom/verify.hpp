// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace swdom {

// Named invariant suites runnable from the CLI (`swdom verify <suite>`).
// Each check yields one line; a suite passes iff every line does.
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;

  bool all_pass() const;
};

SuiteReport verify_tnorms(std::uint64_t seed = 0);
SuiteReport verify_law(std::uint64_t seed = 0);

// The falsifier suite sweeps a grid_cells x grid_cells log grid of
// parameter pairs and checks both search routes against the closed form;
// grid_cells = 60 reproduces the full desk-scale confirmation (minutes).
// Progress dots go to `progress` when given.
SuiteReport verify_falsifier(std::uint64_t seed = 0, int grid_cells = 60,
                             std::ostream* progress = nullptr);

// Shared machinery for the falsifier suite and the acceptance harness: for
// every pair of a log-spaced grid, run falsify and (for lambda < mu)
// reduced_search, and compare with the closed form. Pairs within a 1e-3
// relative band of the boundary curve lambda = f(mu) or of the critical
// line mu = 17 + 12*sqrt(2) are skipped (witness gaps vanish there).
struct OracleSweep {
  int cells_total = 0;
  int cells_checked = 0;
  int cells_skipped_band = 0;
  std::vector<std::array<double, 2>> falsify_disagreements;
  std::vector<std::array<double, 2>> reduced_disagreements;
  std::vector<std::array<double, 2>> map_failures;  // mapped witness not negative

  bool clean() const {
    return falsify_disagreements.empty() && reduced_disagreements.empty() &&
           map_failures.empty();
  }
};

OracleSweep run_oracle_sweep(int grid_cells, double lo, double hi, std::uint64_t seed,
                             std::ostream* progress = nullptr);

}  // namespace swdom
