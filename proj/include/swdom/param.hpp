// Copyright 2026 The swdom authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swdom {

// Family parameter in [0, +inf]. Finite values must be nonnegative; NaN is
// rejected, so the order induced by operator<=> is total.
class ParamValue {
 public:
  ParamValue(double v) : v_(v) {  // NOLINT: implicit by design, doubles map 1:1
    if (std::isnan(v_)) throw std::invalid_argument("ParamValue: NaN is not a parameter");
    if (v_ < 0.0) throw std::invalid_argument("ParamValue: negative parameter");
  }

  static ParamValue infinity() { return ParamValue(std::numeric_limits<double>::infinity()); }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_infinite() const { return std::isinf(v_); }

  // The raw value; +inf for the infinite member.
  double value() const { return v_; }

  friend bool operator==(ParamValue a, ParamValue b) { return a.v_ == b.v_; }
  friend bool operator!=(ParamValue a, ParamValue b) { return a.v_ != b.v_; }
  friend bool operator<(ParamValue a, ParamValue b) { return a.v_ < b.v_; }
  friend bool operator<=(ParamValue a, ParamValue b) { return a.v_ <= b.v_; }
  friend bool operator>(ParamValue a, ParamValue b) { return a.v_ > b.v_; }
  friend bool operator>=(ParamValue a, ParamValue b) { return a.v_ >= b.v_; }

 private:
  double v_;
};

// A point of the unit interval. Construction enforces 0 <= v <= 1 up to a
// 1e-12 slack for round-off from coordinate substitutions; anything further
// out is an error rather than a silent clamp.
class UnitValue {
 public:
  explicit UnitValue(double v) : v_(v) {
    constexpr double slack = 1e-12;
    if (!(v_ >= -slack && v_ <= 1.0 + slack)) {
      throw std::domain_error("UnitValue: value outside [0,1] beyond slack");
    }
    if (v_ < 0.0) v_ = 0.0;
    if (v_ > 1.0) v_ = 1.0;
  }

  double value() const { return v_; }

  friend bool operator==(UnitValue a, UnitValue b) { return a.v_ == b.v_; }
  friend bool operator<(UnitValue a, UnitValue b) { return a.v_ < b.v_; }
  friend bool operator<=(UnitValue a, UnitValue b) { return a.v_ <= b.v_; }

 private:
  double v_;
};

enum class TNormKind { minimum, product, lukasiewicz, drastic, sugeno_weber };

// Identifier of a t-norm: one of the four basic norms or a Sugeno-Weber
// family member T_SW^lambda. The family overlaps the basic norms at
// lambda = 0 (product), 1 (Lukasiewicz) and inf (drastic).
class TNormId {
 public:
  static TNormId minimum() { return TNormId(TNormKind::minimum, 0.0); }
  static TNormId product() { return TNormId(TNormKind::product, 0.0); }
  static TNormId lukasiewicz() { return TNormId(TNormKind::lukasiewicz, 0.0); }
  static TNormId drastic() { return TNormId(TNormKind::drastic, 0.0); }
  static TNormId sugeno_weber(ParamValue lambda) {
    return TNormId(TNormKind::sugeno_weber, lambda);
  }

  TNormKind kind() const { return kind_; }

  ParamValue lambda() const {
    if (kind_ != TNormKind::sugeno_weber) {
      throw std::logic_error("TNormId: lambda() on a non-family norm");
    }
    return lambda_;
  }

 private:
  TNormId(TNormKind k, ParamValue l) : kind_(k), lambda_(l) {}

  TNormKind kind_;
  ParamValue lambda_;
};

}  // namespace swdom
