// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#include "swdom/kernels.hpp"

#include <atomic>

namespace swdom::kernels {

using GapRowFn = void (*)(double, double, double, double, double, const double*, double*,
                          std::size_t);
using ReducedRowFn = void (*)(double, double, double, double, double, const double*, double*,
                              std::size_t, bool);

// Reference kernels; always available.
void gap_row_scalar(double, double, double, double, double, const double*, double*, std::size_t);
void reduced_score_row_scalar(double, double, double, double, double, const double*, double*,
                              std::size_t, bool);

// SIMD variants; the *_available flags are false on foreign architectures.
bool avx2_available();
void gap_row_avx2(double, double, double, double, double, const double*, double*, std::size_t);
void reduced_score_row_avx2(double, double, double, double, double, const double*, double*,
                            std::size_t, bool);

bool neon_available();
void gap_row_neon(double, double, double, double, double, const double*, double*, std::size_t);
void reduced_score_row_neon(double, double, double, double, double, const double*, double*,
                            std::size_t, bool);

namespace {

struct Dispatch {
  Backend backend;
  GapRowFn gap;
  ReducedRowFn reduced;
};

Dispatch make(Backend b) {
  switch (b) {
    case Backend::avx2:
      return {Backend::avx2, &gap_row_avx2, &reduced_score_row_avx2};
    case Backend::neon:
      return {Backend::neon, &gap_row_neon, &reduced_score_row_neon};
    case Backend::scalar:
    default:
      return {Backend::scalar, &gap_row_scalar, &reduced_score_row_scalar};
  }
}

Dispatch detect() {
  if (avx2_available()) return make(Backend::avx2);
  if (neon_available()) return make(Backend::neon);
  return make(Backend::scalar);
}

std::atomic<const Dispatch*> g_active{nullptr};

const Dispatch* active_dispatch() {
  const Dispatch* d = g_active.load(std::memory_order_acquire);
  if (d == nullptr) {
    static const Dispatch detected = detect();
    g_active.store(&detected, std::memory_order_release);
    d = &detected;
  }
  return d;
}

void store(Backend b) {
  static const Dispatch scalar = make(Backend::scalar);
  static const Dispatch avx2 = make(Backend::avx2);
  static const Dispatch neon = make(Backend::neon);
  switch (b) {
    case Backend::avx2: g_active.store(&avx2, std::memory_order_release); break;
    case Backend::neon: g_active.store(&neon, std::memory_order_release); break;
    case Backend::scalar: g_active.store(&scalar, std::memory_order_release); break;
  }
}

}  // namespace

Backend active() { return active_dispatch()->backend; }

std::string_view name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "?";
}

bool select(std::string_view backend) {
  if (backend == "auto") {
    static const Dispatch detected = detect();
    g_active.store(&detected, std::memory_order_release);
    return true;
  }
  if (backend == "scalar") {
    store(Backend::scalar);
    return true;
  }
  if (backend == "avx2") {
    if (!avx2_available()) return false;
    store(Backend::avx2);
    return true;
  }
  if (backend == "neon") {
    if (!neon_available()) return false;
    store(Backend::neon);
    return true;
  }
  return false;
}

void gap_row(double lambda, double mu, double x, double y, double u, const double* vs,
             double* out, std::size_t n) {
  active_dispatch()->gap(lambda, mu, x, y, u, vs, out, n);
}

void reduced_score_row(double lambda, double mu, double x, double y, double u, const double* ts,
                       double* out, std::size_t n, bool b_only) {
  active_dispatch()->reduced(lambda, mu, x, y, u, ts, out, n, b_only);
}

}  // namespace swdom::kernels
