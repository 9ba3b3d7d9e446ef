// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string_view>

namespace swdom::kernels {

// Batch kernels for the two hot grid scans. Each kernel has a scalar
// reference implementation and SIMD variants (AVX2 on x86-64, NEON on
// aarch64) selected once at runtime. All variants perform the same IEEE
// operations in the same order, so their outputs are bit-identical; the
// equivalence is enforced by tests (kernel sources are compiled with
// floating-point contraction disabled).
enum class Backend { scalar, avx2, neon };

Backend active();
std::string_view name(Backend b);

// Select a backend by name: "scalar", "avx2", "neon" or "auto". Returns
// false (and leaves the selection unchanged) if the requested backend is
// not available on this machine.
bool select(std::string_view backend);

// out[i] = dominance gap of (T_SW^lambda, T_SW^mu) at (x, y, u, vs[i]).
// Requires finite lambda > 0 and finite mu >= 0.
void gap_row(double lambda, double mu, double x, double y, double u, const double* vs,
             double* out, std::size_t n);

// out[i] = max(ineqA, ineqB) of the reduced formulation at the box point
// (x, y, u, ts[i]), where vtilde = y + t*(1 + (lambda-1)*y). If b_only is
// set, out[i] = ineqB alone.
void reduced_score_row(double lambda, double mu, double x, double y, double u, const double* ts,
                       double* out, std::size_t n, bool b_only);

}  // namespace swdom::kernels
