// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#include "swdom/falsify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "swdom/kernels.hpp"

namespace swdom {
namespace {

constexpr double k_lo = 1e-12;        // open-cube inset for search points
constexpr double k_hi = 1.0 - 1e-12;

double clamp_open(double t) { return std::min(k_hi, std::max(k_lo, t)); }

// Canonical double-level gap for a Sugeno-Weber pair; identical operation
// order to dominance_gap, so re-evaluations agree bit for bit.
double gap_sw(double l, double m, double x, double y, double u, double v) {
  using detail::tsw;
  return tsw(l, tsw(m, x, y), tsw(m, u, v)) - tsw(m, tsw(l, x, u), tsw(l, y, v));
}

// max(A - B, -B) with the clamped sides A, B. Equals the gap wherever B > 0
// (every violation lies there, since B > 0 forces all inner terms positive)
// and, unlike the gap, has no flat zero plateau to strand a descent.
double surrogate(double l, double m, double x, double y, double u, double v) {
  using detail::tsw;
  const double m1 = tsw(l, u, x);
  const double m2 = tsw(l, v, y);
  const double m3 = tsw(m, u, v);
  const double m4 = tsw(m, x, y);
  const double a = detail::bilinear(l, m3, m4);
  const double b = detail::bilinear(m, m1, m2);
  return std::max(a - b, -b);
}

struct Cell {
  double gap;
  std::uint64_t idx;

  bool better_than(const Cell& o) const { return gap < o.gap || (gap == o.gap && idx < o.idx); }
};

struct ScanResult {
  Cell best{std::numeric_limits<double>::infinity(), 0};
  std::vector<Cell> top;  // k best cells, ordered
};

// Row-major linear index over the interior grid; lexicographic order of the
// (ix, iy, iu, iv) tuple, which is the documented tie-break.
ScanResult scan_grid(double l, double m, int n, std::size_t k, int threads, bool reduced,
                     bool b_only) {
  std::vector<double> vals(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = (i + 0.5) / n;

  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  const int t_count = std::max(1, std::min(threads > 0 ? threads : hw, n));

  std::vector<ScanResult> partial(static_cast<std::size_t>(t_count));
  auto worker = [&](int tid) {
    ScanResult& res = partial[static_cast<std::size_t>(tid)];
    res.top.reserve(k + 1);
    std::vector<double> row(static_cast<std::size_t>(n));
    const int ix_lo = static_cast<int>(static_cast<std::int64_t>(tid) * n / t_count);
    const int ix_hi = static_cast<int>(static_cast<std::int64_t>(tid + 1) * n / t_count);
    for (int ix = ix_lo; ix < ix_hi; ++ix) {
      for (int iy = 0; iy < n; ++iy) {
        for (int iu = 0; iu < n; ++iu) {
          if (reduced) {
            kernels::reduced_score_row(l, m, vals[ix], vals[iy], vals[iu], vals.data(),
                                       row.data(), static_cast<std::size_t>(n), b_only);
          } else {
            kernels::gap_row(l, m, vals[ix], vals[iy], vals[iu], vals.data(), row.data(),
                             static_cast<std::size_t>(n));
          }
          const std::uint64_t base =
              ((static_cast<std::uint64_t>(ix) * n + iy) * n + iu) * static_cast<std::uint64_t>(n);
          for (int iv = 0; iv < n; ++iv) {
            const Cell c{row[static_cast<std::size_t>(iv)], base + static_cast<std::uint64_t>(iv)};
            if (c.better_than(res.best)) res.best = c;
            if (res.top.size() < k || c.better_than(res.top.back())) {
              auto pos = std::lower_bound(res.top.begin(), res.top.end(), c,
                                          [](const Cell& a, const Cell& b) {
                                            return a.better_than(b);
                                          });
              res.top.insert(pos, c);
              if (res.top.size() > k) res.top.pop_back();
            }
          }
        }
      }
    }
  };

  if (t_count == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t_count));
    for (int t = 0; t < t_count; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  ScanResult merged;
  for (const auto& p : partial) {
    if (p.best.better_than(merged.best)) merged.best = p.best;
    merged.top.insert(merged.top.end(), p.top.begin(), p.top.end());
  }
  std::sort(merged.top.begin(), merged.top.end(),
            [](const Cell& a, const Cell& b) { return a.better_than(b); });
  if (merged.top.size() > k) merged.top.resize(k);
  return merged;
}

Point4 cell_point(std::uint64_t idx, int n) {
  const std::uint64_t nn = static_cast<std::uint64_t>(n);
  const int iv = static_cast<int>(idx % nn);
  const int iu = static_cast<int>((idx / nn) % nn);
  const int iy = static_cast<int>((idx / (nn * nn)) % nn);
  const int ix = static_cast<int>(idx / (nn * nn * nn));
  return Point4{(ix + 0.5) / n, (iy + 0.5) / n, (iu + 0.5) / n, (iv + 0.5) / n};
}

// xorshift-free uniform in [-0.5, 0.5); keeps jitter reproducible across
// standard libraries, unlike uniform_real_distribution.
double unit_jitter(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53 - 0.5;
}

// ---------------------------------------------------------------------------
// Corner-ladder scans of the two swap-symmetry planes of the gap,
// {x = u, y = v} and {x = y, u = v}. Violation pockets straddle these planes
// but can be far finer than any affordable uniform 4-D grid; a 2-D ladder
// scan with zooming around local minima locates them cheaply. The raw search
// ladders run toward the (1,1,1,1) corner, the reduced ones toward 0.
// ---------------------------------------------------------------------------

struct PlaneBest {
  double value = std::numeric_limits<double>::infinity();
  double a = 0.5, b = 0.5;
};

template <typename Obj2D>
PlaneBest plane_search(const Obj2D& obj, bool toward_one, int m, int topk) {
  const double d_lo = 4e-6, d_hi = 0.7;
  std::vector<double> vals(static_cast<std::size_t>(m));
  std::vector<double> step(static_cast<std::size_t>(m));
  const double ln_lo = std::log(d_lo), ln_hi = std::log(d_hi);
  double prev_d = 0.0;
  for (int i = 0; i < m; ++i) {
    const double d = std::exp(ln_lo + (ln_hi - ln_lo) * i / (m - 1));
    vals[static_cast<std::size_t>(i)] = toward_one ? 1.0 - d : d;
    step[static_cast<std::size_t>(i)] = i == 0 ? 0.0 : std::abs(d - prev_d);
    prev_d = d;
  }
  step[0] = step[1];

  std::vector<double> grid(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      grid[static_cast<std::size_t>(i) * m + j] = obj(vals[i], vals[j]);
    }
  }

  const auto at = [&](int i, int j) -> double {
    if (i < 0 || j < 0 || i >= m || j >= m) return std::numeric_limits<double>::infinity();
    return grid[static_cast<std::size_t>(i) * m + j];
  };

  // Candidate centers: local minima of the coarse grid, most negative first.
  // The corner asymptote of the objective slopes monotonically, so it
  // contributes no local minimum and cannot crowd out pocket basins.
  struct Cand {
    double value;
    int i, j;
  };
  std::vector<Cand> cands;
  int gi = 0, gj = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double g = at(i, j);
      if (g < at(gi, gj)) gi = i, gj = j;
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di || dj) && !(g <= at(i + di, j + dj))) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) cands.push_back({g, i, j});
    }
  }
  std::sort(cands.begin(), cands.end(), [m](const Cand& a, const Cand& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.i * m + a.j < b.i * m + b.j;
  });
  if (cands.size() > static_cast<std::size_t>(topk)) cands.resize(static_cast<std::size_t>(topk));
  const bool have_gmin = std::any_of(cands.begin(), cands.end(),
                                     [&](const Cand& c) { return c.i == gi && c.j == gj; });
  if (!have_gmin) cands.push_back({at(gi, gj), gi, gj});

  PlaneBest best{at(gi, gj), vals[static_cast<std::size_t>(gi)],
                 vals[static_cast<std::size_t>(gj)]};
  constexpr int zoom_pts = 40;
  for (const Cand& c : cands) {
    double ca = vals[static_cast<std::size_t>(c.i)], cb = vals[static_cast<std::size_t>(c.j)];
    double ra = 1.6 * step[static_cast<std::size_t>(c.i)];
    double rb = 1.6 * step[static_cast<std::size_t>(c.j)];
    double cv = c.value;
    for (int level = 0; level < 3; ++level) {
      double za = ca, zb = cb, zv = cv;
      for (int i = 0; i < zoom_pts; ++i) {
        const double a = clamp_open(ca - ra + 2.0 * ra * i / (zoom_pts - 1));
        for (int j = 0; j < zoom_pts; ++j) {
          const double b = clamp_open(cb - rb + 2.0 * rb * j / (zoom_pts - 1));
          const double g = obj(a, b);
          if (g < zv) {
            zv = g;
            za = a;
            zb = b;
          }
        }
      }
      ca = za;
      cb = zb;
      cv = zv;
      ra *= 0.15;
      rb *= 0.15;
    }
    if (cv < best.value) best = PlaneBest{cv, ca, cb};
  }
  return best;
}

Point4 plane_point(const PlaneBest& pb, int mode) {
  return mode == 0 ? Point4{pb.a, pb.b, pb.a, pb.b} : Point4{pb.a, pb.a, pb.b, pb.b};
}

// ---------------------------------------------------------------------------
// Exact piecewise-linear line minimization of the gap.
// ---------------------------------------------------------------------------

struct LineForm {
  // The coordinate enters one inner term on each side, both linear with the
  // shown slope/intercept; the other factor of each side is fixed.
  double a_slope, a_icept;  // mu-side term depending on the coordinate
  double b_slope, b_icept;  // lambda-side term
  double m_other_a;         // clamped fixed mu-side term
  double m_other_b;         // clamped fixed lambda-side term
};

LineForm line_form(double l, double m, const Point4& p, int c) {
  using detail::tsw;
  const auto slope = [](double parm, double other) { return (1.0 - parm) * other + parm; };
  const auto icept = [](double parm, double other) { return parm * (other - 1.0); };
  switch (c) {
    case 0:  // x: X4(x; y) on the mu side, X1(x; u) on the lambda side
      return {slope(m, p.y), icept(m, p.y), slope(l, p.u), icept(l, p.u), tsw(m, p.u, p.v),
              tsw(l, p.v, p.y)};
    case 1:  // y: X4(y; x), X2(y; v)
      return {slope(m, p.x), icept(m, p.x), slope(l, p.v), icept(l, p.v), tsw(m, p.u, p.v),
              tsw(l, p.u, p.x)};
    case 2:  // u: X3(u; v), X1(u; x)
      return {slope(m, p.v), icept(m, p.v), slope(l, p.x), icept(l, p.x), tsw(m, p.x, p.y),
              tsw(l, p.v, p.y)};
    default:  // v: X3(v; u), X2(v; y)
      return {slope(m, p.u), icept(m, p.u), slope(l, p.y), icept(l, p.y), tsw(m, p.x, p.y),
              tsw(l, p.u, p.x)};
  }
}

void push_candidate(std::vector<double>& out, double t) {
  if (std::isfinite(t) && t > k_lo && t < k_hi) out.push_back(t);
}

// Breakpoints of the restricted gap: zeros of the two coordinate-dependent
// inner terms and of the two clamped sides on their active pieces.
void line_candidates(double l, double m, const Point4& p, int c, std::vector<double>& out) {
  out.clear();
  out.push_back(k_lo);
  out.push_back(k_hi);
  const LineForm f = line_form(l, m, p, c);
  if (f.a_slope != 0.0) push_candidate(out, -f.a_icept / f.a_slope);
  if (f.b_slope != 0.0) push_candidate(out, -f.b_icept / f.b_slope);
  const double ca = (1.0 - l) * f.m_other_a + l;
  if (ca != 0.0 && f.a_slope != 0.0) {
    push_candidate(out, (-l * (f.m_other_a - 1.0) / ca - f.a_icept) / f.a_slope);
  }
  const double cb = (1.0 - m) * f.m_other_b + m;
  if (cb != 0.0 && f.b_slope != 0.0) {
    push_candidate(out, (-m * (f.m_other_b - 1.0) / cb - f.b_icept) / f.b_slope);
  }
  std::sort(out.begin(), out.end());
}

double set_coord(Point4& p, int c, double t) {
  double* fields[4] = {&p.x, &p.y, &p.u, &p.v};
  const double old = *fields[c];
  *fields[c] = t;
  return old;
}

}  // namespace

void SearchConfig::validate() const {
  if (grid_n < 2) throw std::invalid_argument("SearchConfig: grid_n must be >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("SearchConfig: tol must be positive");
  if (refine_iters < 0) throw std::invalid_argument("SearchConfig: refine_iters must be >= 0");
}

GridScan grid_min_gap(ParamValue lambda, ParamValue mu, const SearchConfig& cfg, int threads) {
  cfg.validate();
  if (lambda.value() == 0.0 || lambda.is_infinite() || mu.is_infinite()) {
    throw std::domain_error("grid_min_gap: degenerate parameter decided by the closed form");
  }
  const ScanResult res = scan_grid(lambda.value(), mu.value(), cfg.grid_n, 1, threads,
                                   /*reduced=*/false, /*b_only=*/false);
  return GridScan{res.best.gap, cell_point(res.best.idx, cfg.grid_n)};
}

Point4 refine_witness(ParamValue lambda, ParamValue mu, Point4 start, const SearchConfig& cfg) {
  cfg.validate();
  if (lambda.value() == 0.0 || lambda.is_infinite() || mu.is_infinite()) {
    throw std::domain_error("refine_witness: degenerate parameter decided by the closed form");
  }
  const double l = lambda.value(), m = mu.value();
  Point4 p{clamp_open(start.x), clamp_open(start.y), clamp_open(start.u), clamp_open(start.v)};
  double g = gap_sw(l, m, p.x, p.y, p.u, p.v);
  std::vector<double> cands;
  for (int sweep = 0; sweep < cfg.refine_iters; ++sweep) {
    const double g_before = g;
    for (int c = 0; c < 4; ++c) {
      line_candidates(l, m, p, c, cands);
      double best_t = 0.0;
      double best_g = g;
      bool moved = false;
      for (const double t : cands) {
        const double old = set_coord(p, c, t);
        const double gt = gap_sw(l, m, p.x, p.y, p.u, p.v);
        set_coord(p, c, old);
        if (gt < best_g) {
          best_g = gt;
          best_t = t;
          moved = true;
        }
      }
      if (moved) {
        set_coord(p, c, best_t);
        g = best_g;
      }
    }
    if (g_before - g <= 1e-15) break;
  }
  return p;
}

FalsifyResult falsify(ParamValue lambda, ParamValue mu, const SearchConfig& cfg, int threads) {
  cfg.validate();
  const Point4 corner{1.0, 1.0, 1.0, 1.0};
  if (lambda.value() == 0.0 || mu.is_infinite() || lambda == mu) {
    return FalsifyResult{std::nullopt, 0.0, corner};
  }
  if (lambda.is_infinite()) {
    // T_D(a, b) = 0 on [0,1)^2 and T_mu(0, 0) = 0: the gap of (T_D, T_mu)
    // vanishes on the whole open cube, so no interior witness exists.
    const Point4 center{0.5, 0.5, 0.5, 0.5};
    return FalsifyResult{std::nullopt, 0.0, center};
  }

  const double l = lambda.value(), m = mu.value();
  const ScanResult scan = scan_grid(l, m, cfg.grid_n, 16, threads, false, false);

  double best_gap = scan.best.gap;
  Point4 best_point = cell_point(scan.best.idx, cfg.grid_n);

  const auto consider = [&](const Point4& p) {
    const double g = gap_sw(l, m, p.x, p.y, p.u, p.v);
    if (g < best_gap) {
      best_gap = g;
      best_point = p;
    }
  };
  const auto refine_from = [&](const Point4& p) {
    consider(p);
    consider(refine_witness(lambda, mu, p, cfg));
  };

  std::mt19937_64 rng(cfg.seed);
  const double cell_w = 1.0 / cfg.grid_n;
  for (const Cell& c : scan.top) {
    const Point4 center = cell_point(c.idx, cfg.grid_n);
    refine_from(center);
    for (int j = 0; j < 2; ++j) {
      Point4 q{clamp_open(center.x + cell_w * unit_jitter(rng)),
               clamp_open(center.y + cell_w * unit_jitter(rng)),
               clamp_open(center.u + cell_w * unit_jitter(rng)),
               clamp_open(center.v + cell_w * unit_jitter(rng))};
      refine_from(q);
    }
  }

  if (!(best_gap < -cfg.tol)) {
    for (const int m_plane : {160, 256, 384}) {
      for (int mode = 0; mode < 2; ++mode) {
        const auto obj = [&](double a, double b) {
          return mode == 0 ? surrogate(l, m, a, b, a, b) : surrogate(l, m, a, a, b, b);
        };
        const PlaneBest pb = plane_search(obj, /*toward_one=*/true, m_plane, 10);
        refine_from(plane_point(pb, mode));
      }
      if (best_gap < -cfg.tol) break;
    }
  }

  if (best_gap < -cfg.tol) {
    const Witness w{best_point.x, best_point.y, best_point.u, best_point.v, best_gap};
    return FalsifyResult{w, best_gap, best_point};
  }
  const double min_gap = std::min(best_gap, scan.best.gap);
  return FalsifyResult{std::nullopt, min_gap, best_point};
}

ReducedIneqs reduced_inequalities(double lambda, double mu, double x, double y, double u,
                                  double v_tilde) {
  const double a = u * ((lambda - 1.0) * x + 1.0) * ((mu - 1.0) * v_tilde + 1.0) +
                   (mu - 1.0) * v_tilde * x + v_tilde + x - 1.0;
  const double b = v_tilde * x * (1.0 - (lambda - 1.0) * (mu - 1.0) * u * y) +
                   y * ((lambda - 1.0) * u * y * ((mu - 1.0) * x + 1.0) + u - x);
  return ReducedIneqs{a, b};
}

bool reduced_violation(ParamValue lambda, ParamValue mu, double x, double y, double u,
                       double v_tilde) {
  if (!lambda.is_finite() || !mu.is_finite() || !(0.0 < lambda.value()) || !(lambda < mu)) {
    throw std::invalid_argument("reduced_violation: requires finite 0 < lambda < mu");
  }
  const double l = lambda.value();
  if (!(0.0 < x && x < 1.0)) return false;
  if (!(0.0 < y && y < 1.0)) return false;
  if (!(0.0 < u && u < 1.0)) return false;
  if (!(y < v_tilde && v_tilde < 1.0 + l * y)) return false;
  const ReducedIneqs q = reduced_inequalities(l, mu.value(), x, y, u, v_tilde);
  return q.a < 0.0 && q.b < 0.0;
}

namespace {

// Box coordinates (x, y, u, t) with vtilde = y + t*(1 + lambda*y - y); the
// constraint y < vtilde < 1 + lambda*y holds for any t in (0, 1), and t
// coincides with the reduced v, so the box is the mirrored unit cube.
double vtilde_of(double l, double y, double t) { return y + t * ((1.0 + l * y) - y); }

double reduced_score(double l, double m, double x, double y, double u, double t, bool b_only) {
  const ReducedIneqs q = reduced_inequalities(l, m, x, y, u, vtilde_of(l, y, t));
  return b_only ? q.b : std::max(q.a, q.b);
}

struct BoxBest {
  double score = std::numeric_limits<double>::infinity();
  Point4 p;  // v field holds the t coordinate
};

BoxBest zoom_box(double l, double m, BoxBest start, bool b_only) {
  BoxBest best = start;
  double f = 1.8;
  constexpr int pts = 11;
  for (int level = 0; level < 6; ++level) {
    const double half = 0.5 * (f - 1.0);
    double axes[4][pts];
    const double* c = &best.p.x;
    for (int d = 0; d < 4; ++d) {
      const double lo = clamp_open(c[d] * (1.0 - half));
      const double hi = clamp_open(c[d] * (1.0 + half));
      for (int i = 0; i < pts; ++i) axes[d][i] = lo + (hi - lo) * i / (pts - 1);
    }
    BoxBest lvl = best;
    for (int i0 = 0; i0 < pts; ++i0) {
      for (int i1 = 0; i1 < pts; ++i1) {
        for (int i2 = 0; i2 < pts; ++i2) {
          for (int i3 = 0; i3 < pts; ++i3) {
            const double s =
                reduced_score(l, m, axes[0][i0], axes[1][i1], axes[2][i2], axes[3][i3], b_only);
            if (s < lvl.score) {
              lvl = BoxBest{s, {axes[0][i0], axes[1][i1], axes[2][i2], axes[3][i3]}};
            }
          }
        }
      }
    }
    best = lvl;
    f = 1.0 + (f - 1.0) * 0.5;
  }
  return best;
}

}  // namespace

std::optional<ReducedWitness> reduced_search(ParamValue lambda, ParamValue mu,
                                             const SearchConfig& cfg, bool ignore_ineq_a,
                                             int threads) {
  cfg.validate();
  if (!lambda.is_finite() || !mu.is_finite() || !(0.0 < lambda.value()) || !(lambda < mu)) {
    throw std::invalid_argument("reduced_search: requires finite 0 < lambda < mu");
  }
  const double l = lambda.value(), m = mu.value();

  const ScanResult scan = scan_grid(l, m, cfg.grid_n, 1, threads, /*reduced=*/true, ignore_ineq_a);
  BoxBest best{reduced_score(l, m, 0.5, 0.5, 0.5, 0.5, ignore_ineq_a), {0.5, 0.5, 0.5, 0.5}};
  {
    const Point4 p = cell_point(scan.best.idx, cfg.grid_n);
    const double s = reduced_score(l, m, p.x, p.y, p.u, p.v, ignore_ineq_a);
    if (s < best.score) best = BoxBest{s, p};
  }

  if (!(best.score < -cfg.tol)) {
    for (const int m_plane : {160, 256, 384}) {
      for (int mode = 0; mode < 2; ++mode) {
        const auto obj = [&](double a, double b) {
          return mode == 0 ? reduced_score(l, m, a, b, a, b, ignore_ineq_a)
                           : reduced_score(l, m, a, a, b, b, ignore_ineq_a);
        };
        const PlaneBest pb = plane_search(obj, /*toward_one=*/false, m_plane, 10);
        const Point4 p = plane_point(pb, mode);
        const double s = reduced_score(l, m, p.x, p.y, p.u, p.v, ignore_ineq_a);
        if (s < best.score) best = BoxBest{s, p};
      }
      if (best.score < -cfg.tol) break;
    }
  }
  if (best.score >= -cfg.tol) best = zoom_box(l, m, best, ignore_ineq_a);

  if (!(best.score < -cfg.tol)) return std::nullopt;
  const double vt = vtilde_of(l, best.p.y, best.p.v);
  const ReducedIneqs q = reduced_inequalities(l, m, best.p.x, best.p.y, best.p.u, vt);
  return ReducedWitness{best.p.x, best.p.y, best.p.u, vt, q.a, q.b};
}

Point4 map_reduced_to_raw(ParamValue lambda, ParamValue mu, const ReducedWitness& w) {
  if (!lambda.is_finite() || !mu.is_finite()) {
    throw std::invalid_argument("map_reduced_to_raw: requires finite parameters");
  }
  const double l = lambda.value();
  const double v = (w.v_tilde - w.y) / (1.0 + (l - 1.0) * w.y);
  const Point4 raw{1.0 - w.x, 1.0 - w.y, 1.0 - w.u, 1.0 - v};
  constexpr double slack = 1e-12;
  for (const double c : {raw.x, raw.y, raw.u, raw.v}) {
    if (!(c > -slack && c < 1.0 + slack)) {
      throw std::domain_error("map_reduced_to_raw: mapped coordinate outside (0,1)");
    }
  }
  return raw;
}

double identity_residual(double lambda, double mu, double x, double y, double u, double v) {
  using detail::bilinear;
  const double x1 = bilinear(lambda, u, x);
  const double x2 = bilinear(lambda, v, y);
  const double x3 = bilinear(mu, u, v);
  const double x4 = bilinear(mu, x, y);
  const double a = bilinear(lambda, x3, x4);
  const double b = bilinear(mu, x1, x2);
  const double factored =
      (mu - lambda) * ((mu + lambda * (1.0 - mu)) * (u - 1.0) * (v - 1.0) * (x - 1.0) * (y - 1.0) -
                       ((u - 1.0) * y - u) * ((v - 1.0) * x - v) + 1.0);
  return (a - b) - factored;
}

}  // namespace swdom
