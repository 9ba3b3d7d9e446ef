// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#include "swdom/region.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace swdom {
namespace {

std::vector<double> spaced(double lo, double hi, int n, Scale scale) {
  std::vector<double> out(static_cast<std::size_t>(n));
  if (scale == Scale::log) {
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
    }
    out.front() = lo;
  } else {
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
  }
  out.back() = hi;
  return out;
}

void check_range(std::pair<double, double> r, Scale scale, const char* what) {
  const auto [lo, hi] = r;
  if (std::isnan(lo) || std::isnan(hi) || !(lo < hi) || !(hi < 1.0 / 0.0) || lo < 0.0) {
    throw std::invalid_argument(std::string(what) + ": need 0 <= lo < hi < inf");
  }
  if (scale == Scale::log && !(lo > 0.0)) {
    throw std::invalid_argument(std::string(what) + ": log scale needs lo > 0");
  }
}

// 17 significant digits: enough for a double to round-trip exactly.
void put17(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

RegionGrid sample_region(std::pair<double, double> lambda_range,
                         std::pair<double, double> mu_range, int n, Scale scale) {
  if (n < 2) throw std::invalid_argument("sample_region: n must be >= 2");
  check_range(lambda_range, scale, "sample_region lambda range");
  check_range(mu_range, scale, "sample_region mu range");

  RegionGrid grid;
  grid.lambdas = spaced(lambda_range.first, lambda_range.second, n, scale);
  grid.mus = spaced(mu_range.first, mu_range.second, n, scale);
  grid.cells.reserve(grid.lambdas.size() * grid.mus.size());
  for (const double l : grid.lambdas) {
    for (const double m : grid.mus) {
      const DominanceVerdict v = dominates_closed_form(ParamValue(l), ParamValue(m));
      grid.cells.push_back(RegionGrid::Cell{v.dominates, v.condition});
    }
  }
  return grid;
}

BoundaryCurve boundary_curve(double mu_lo, double mu_hi, int n) {
  if (n < 2) throw std::invalid_argument("boundary_curve: n must be >= 2");
  if (!(k_r_crit < mu_lo && mu_lo < mu_hi && std::isfinite(mu_hi))) {
    throw std::invalid_argument("boundary_curve: need 17 + 12*sqrt(2) < mu_lo < mu_hi < inf");
  }
  BoundaryCurve curve;
  curve.samples.reserve(static_cast<std::size_t>(n));
  for (const double mu : spaced(mu_lo, mu_hi, n, Scale::log)) {
    curve.samples.push_back(BoundaryCurve::Sample{mu, f_eval(mu)});
  }
  return curve;
}

void export_csv(const RegionGrid& grid, std::ostream& os) {
  os << "lambda,mu,dominates,condition\n";
  for (std::size_t i = 0; i < grid.lambdas.size(); ++i) {
    for (std::size_t j = 0; j < grid.mus.size(); ++j) {
      const RegionGrid::Cell& c = grid.at(i, j);
      put17(os, grid.lambdas[i]);
      os << ',';
      put17(os, grid.mus[j]);
      os << ',' << (c.dominates ? 1 : 0) << ',';
      if (c.condition) os << to_string(*c.condition);
      os << '\n';
    }
  }
}

namespace {

nlohmann::json metadata() {
  return nlohmann::json{
      {"generator_version", std::string(k_generator_version)},
      {"constants", {{"r_crit", k_r_crit}, {"r_star", r_star()}}},
  };
}

}  // namespace

void export_json(const RegionGrid& grid, std::ostream& os) {
  nlohmann::json records = nlohmann::json::array();
  for (std::size_t i = 0; i < grid.lambdas.size(); ++i) {
    for (std::size_t j = 0; j < grid.mus.size(); ++j) {
      const RegionGrid::Cell& c = grid.at(i, j);
      nlohmann::json rec{
          {"lambda", grid.lambdas[i]},
          {"mu", grid.mus[j]},
          {"dominates", c.dominates},
      };
      rec["condition"] = c.condition ? nlohmann::json(std::string(to_string(*c.condition)))
                                     : nlohmann::json(nullptr);
      records.push_back(std::move(rec));
    }
  }
  const nlohmann::json doc{{"metadata", metadata()}, {"records", std::move(records)}};
  os << doc.dump(2) << '\n';
}

void export_csv(const BoundaryCurve& curve, std::ostream& os) {
  os << "lambda,mu\n";
  for (const auto& s : curve.samples) {
    put17(os, s.lambda);
    os << ',';
    put17(os, s.mu);
    os << '\n';
  }
}

void export_json(const BoundaryCurve& curve, std::ostream& os) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& s : curve.samples) {
    records.push_back(nlohmann::json{{"lambda", s.lambda}, {"mu", s.mu}});
  }
  const nlohmann::json doc{{"metadata", metadata()}, {"records", std::move(records)}};
  os << doc.dump(2) << '\n';
}

RegionGrid parse_region_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "lambda,mu,dominates,condition") {
    throw std::runtime_error("parse_region_csv: bad header");
  }
  RegionGrid grid;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string fl, fm, fd, fc;
    if (!std::getline(ss, fl, ',') || !std::getline(ss, fm, ',') || !std::getline(ss, fd, ',')) {
      throw std::runtime_error("parse_region_csv: short row");
    }
    std::getline(ss, fc, ',');
    const double l = std::stod(fl), m = std::stod(fm);
    RegionGrid::Cell cell;
    cell.dominates = fd == "1";
    if (!fc.empty()) {
      if (fc == "i") cell.condition = ConditionTag::i;
      else if (fc == "ii") cell.condition = ConditionTag::ii;
      else if (fc == "iii") cell.condition = ConditionTag::iii;
      else if (fc == "iv") cell.condition = ConditionTag::iv;
      else if (fc == "v") cell.condition = ConditionTag::v;
      else throw std::runtime_error("parse_region_csv: bad condition tag");
    }
    if (grid.lambdas.empty() || grid.lambdas.back() != l) grid.lambdas.push_back(l);
    if (grid.lambdas.size() == 1) grid.mus.push_back(m);
    grid.cells.push_back(cell);
  }
  if (grid.cells.size() != grid.lambdas.size() * grid.mus.size()) {
    throw std::runtime_error("parse_region_csv: ragged grid");
  }
  return grid;
}

}  // namespace swdom
