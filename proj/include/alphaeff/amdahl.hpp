/*
 * Copyright 2026 The alphaeff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Amdahl's law in both directions: from a parallel fraction alpha to the
// speedup S and efficiency R = S/k on k processors, and from measured S or R
// back to the effective parallel fraction alpha_eff. Series-level estimators
// use the fact that 1/R = k(1 - alpha) + alpha is linear in k with slope
// (1 - alpha).

#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphaeff/error.hpp"
#include "alphaeff/regression.hpp"

namespace alphaeff {

/// Number of parallel processors (cores for supercomputers). Always >= 1.
class ProcessorCount {
 public:
  explicit ProcessorCount(std::int64_t k) : k_(k) {
    if (k < 1) {
      throw ParameterError("processor count must be >= 1, got " + std::to_string(k));
    }
  }

  std::int64_t value() const { return k_; }
  double as_double() const { return static_cast<double>(k_); }

  friend auto operator<=>(const ProcessorCount&, const ProcessorCount&) = default;

 private:
  std::int64_t k_;
};

/// Measured or modelled speedup T(1)/T(k).
///
/// When the speedup comes from the model, S - 1 is also kept as computed
/// directly from alpha. For a small parallel fraction S is barely above 1 and
/// rounding S itself would wipe out most of the digits of alpha.
struct Speedup {
  explicit Speedup(double v, std::optional<double> v_minus_one = std::nullopt)
      : value(v), minus_one(v_minus_one) {}

  double value;
  std::optional<double> minus_one;

  /// S - 1.
  double excess() const { return minus_one ? *minus_one : value - 1.0; }
};

/// S/k, or Rmax/Rpeak for a ranked machine. `speedup_minus_one` plays the same
/// role as Speedup::minus_one (kR - 1 = S - 1).
struct Efficiency {
  explicit Efficiency(double v, std::optional<double> kr_minus_one = std::nullopt)
      : value(v), speedup_minus_one(kr_minus_one) {}

  double value;
  std::optional<double> speedup_minus_one;

  /// kR - 1.
  double excess(double k) const { return speedup_minus_one ? *speedup_minus_one : k * value - 1.0; }
};

enum class Method {
  ClosedFormSpeedup,
  ClosedFormEfficiency,
  PairwiseDifference,
  InverseEfficiencySlope,
};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::ClosedFormSpeedup:
      return "closed-form-speedup";
    case Method::ClosedFormEfficiency:
      return "closed-form-efficiency";
    case Method::PairwiseDifference:
      return "pairwise-difference";
    case Method::InverseEfficiencySlope:
      return "inverse-efficiency-slope";
  }
  return "unknown";
}

/// An estimate of the parallel fraction.
///
/// Both alpha and 1 - alpha are stored. Whichever of the two is smaller in
/// magnitude is computed directly from the inputs and the other is its
/// complement, so a sequential fraction of 1e-9 keeps full relative
/// precision instead of being rounded away inside alpha = 0.999999999.
/// alpha + one_minus_alpha == 1 to within one ulp.
struct AlphaEstimate {
  double alpha = 0.0;
  double one_minus_alpha = 1.0;
  Method method = Method::ClosedFormSpeedup;
  /// False exactly when alpha < 0 or alpha > 1 (outside Amdahl's model).
  bool in_model = true;

  /// Builds an estimate from a directly computed sequential fraction.
  static AlphaEstimate from_one_minus_alpha(double one_minus_alpha, Method method) {
    AlphaEstimate e;
    e.method = method;
    e.one_minus_alpha = one_minus_alpha;
    e.alpha = 1.0 - one_minus_alpha;
    // A sequential fraction just below zero must still read as alpha > 1.
    if (one_minus_alpha < 0.0 && e.alpha <= 1.0) {
      e.alpha = std::nextafter(1.0, 2.0);
    }
    e.in_model = e.alpha >= 0.0 && e.alpha <= 1.0;
    return e;
  }

  /// Builds an estimate from a directly computed parallel fraction.
  static AlphaEstimate from_alpha(double alpha, Method method) {
    AlphaEstimate e;
    e.method = method;
    e.alpha = alpha;
    e.one_minus_alpha = 1.0 - alpha;
    e.in_model = e.alpha >= 0.0 && e.alpha <= 1.0;
    return e;
  }
};

namespace detail {

inline void require_finite(double v, std::string_view what) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << what << " must be finite, got " << v;
    throw DomainError(os.str());
  }
}

inline void require_multiprocessor(ProcessorCount k, std::string_view op) {
  if (k.value() < 2) {
    throw UndefinedMeritError(std::string(op) +
                              ": alpha_eff is undefined for k = 1 (division by k - 1)");
  }
}

// k(1 - alpha) + alpha with both fractions supplied by the caller, so each
// caller passes the precise one and its complement.
inline double amdahl_denominator(ProcessorCount k, double alpha, double one_minus_alpha) {
  const double d = k.as_double() * one_minus_alpha + alpha;
  if (!(d > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "alpha = " << alpha << " gives a nonpositive denominator k(1-alpha)+alpha = " << d
       << " for k = " << k.value();
    throw DomainError(os.str());
  }
  return d;
}

// Picks the smaller of the two directly computed fractions as authoritative.
inline AlphaEstimate make_estimate(double alpha, double one_minus_alpha, Method method) {
  if (std::abs(one_minus_alpha) < 0.5) {
    return AlphaEstimate::from_one_minus_alpha(one_minus_alpha, method);
  }
  return AlphaEstimate::from_alpha(alpha, method);
}

}  // namespace detail

namespace detail {

// S = k/d and R = 1/d with S - 1 = (k - 1) alpha / d.
inline Speedup model_speedup(ProcessorCount k, double alpha, double one_minus_alpha) {
  const double d = amdahl_denominator(k, alpha, one_minus_alpha);
  return Speedup{k.as_double() / d, (k.as_double() - 1.0) * alpha / d};
}

inline Efficiency model_efficiency(ProcessorCount k, double alpha, double one_minus_alpha) {
  const double d = amdahl_denominator(k, alpha, one_minus_alpha);
  return Efficiency{1.0 / d, (k.as_double() - 1.0) * alpha / d};
}

}  // namespace detail

/// S = k / (k(1 - alpha) + alpha).
inline Speedup speedup_from_alpha(ProcessorCount k, double alpha) {
  detail::require_finite(alpha, "alpha");
  return detail::model_speedup(k, alpha, 1.0 - alpha);
}

/// R = 1 / (k(1 - alpha) + alpha).
inline Efficiency efficiency_from_alpha(ProcessorCount k, double alpha) {
  detail::require_finite(alpha, "alpha");
  return detail::model_efficiency(k, alpha, 1.0 - alpha);
}

/// Same as speedup_from_alpha, parameterized by the sequential fraction.
inline Speedup speedup_from_one_minus_alpha(ProcessorCount k, double one_minus_alpha) {
  detail::require_finite(one_minus_alpha, "1 - alpha");
  return detail::model_speedup(k, 1.0 - one_minus_alpha, one_minus_alpha);
}

/// Same as efficiency_from_alpha, parameterized by the sequential fraction.
/// Use this when 1 - alpha is tiny: passing alpha would already have lost it.
inline Efficiency efficiency_from_one_minus_alpha(ProcessorCount k, double one_minus_alpha) {
  detail::require_finite(one_minus_alpha, "1 - alpha");
  return detail::model_efficiency(k, 1.0 - one_minus_alpha, one_minus_alpha);
}

/// alpha_eff = k/(k-1) * (S-1)/S, with 1 - alpha_eff = (k - S)/((k-1) S).
inline AlphaEstimate alpha_eff_from_speedup(ProcessorCount k, Speedup s) {
  detail::require_multiprocessor(k, "alpha_eff_from_speedup");
  detail::require_finite(s.value, "speedup");
  if (!(s.value > 0.0)) {
    throw DomainError("speedup must be > 0, got " + std::to_string(s.value));
  }
  const double kd = k.as_double();
  const double denom = (kd - 1.0) * s.value;
  return detail::make_estimate(kd * s.excess() / denom, (kd - s.value) / denom,
                               Method::ClosedFormSpeedup);
}

/// alpha_R = (Rk - 1)/(R(k-1)), with 1 - alpha_R = (1 - R)/(R(k-1)) evaluated
/// directly so R close to 1 does not cancel.
inline AlphaEstimate alpha_from_efficiency(ProcessorCount k, Efficiency r) {
  detail::require_multiprocessor(k, "alpha_from_efficiency");
  detail::require_finite(r.value, "efficiency");
  if (!(r.value > 0.0)) {
    throw DomainError("efficiency must be > 0, got " + std::to_string(r.value));
  }
  const double kd = k.as_double();
  const double denom = r.value * (kd - 1.0);
  return detail::make_estimate(r.excess(kd) / denom, (1.0 - r.value) / denom,
                               Method::ClosedFormEfficiency);
}

// ---------------------------------------------------------------------------
// Scaling series

enum class SeriesKind { Speedup, Efficiency };

inline std::string_view to_string(SeriesKind kind) {
  return kind == SeriesKind::Speedup ? "speedup" : "efficiency";
}

/// One measurement; `value` is a speedup or an efficiency depending on the
/// kind of the series that owns it.
struct ScalingPoint {
  ProcessorCount k;
  double value;
};

/// Measurements of one workload at strictly increasing processor counts.
class ScalingSeries {
 public:
  ScalingSeries(std::string label, SeriesKind kind, std::vector<ScalingPoint> points)
      : label_(std::move(label)), kind_(kind), points_(std::move(points)) {
    if (points_.empty()) {
      throw InsufficientDataError("scaling series '" + label_ + "' has no points");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
      const double v = points_[i].value;
      if (!std::isfinite(v) || !(v > 0.0)) {
        throw DomainError("scaling series '" + label_ + "': value at k = " +
                          std::to_string(points_[i].k.value()) + " must be finite and > 0");
      }
      if (i > 0 && !(points_[i - 1].k < points_[i].k)) {
        throw ParameterError("scaling series '" + label_ +
                             "': processor counts must be strictly increasing");
      }
    }
  }

  const std::string& label() const { return label_; }
  SeriesKind kind() const { return kind_; }
  std::span<const ScalingPoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  /// R at point i (S/k for speedup series).
  double efficiency(std::size_t i) const { return efficiency_of(points_[i], kind_); }

  static double efficiency_of(const ScalingPoint& p, SeriesKind kind) {
    return kind == SeriesKind::Efficiency ? p.value : p.value / p.k.as_double();
  }

  /// 1/R, the quantity that is linear in k under Amdahl's law.
  static double inverse_efficiency_of(const ScalingPoint& p, SeriesKind kind) {
    return kind == SeriesKind::Efficiency ? 1.0 / p.value : p.k.as_double() / p.value;
  }

 private:
  std::string label_;
  SeriesKind kind_;
  std::vector<ScalingPoint> points_;
};

/// Estimate over the processor interval [k_low, k_high].
struct IntervalEstimate {
  ProcessorCount k_low;
  ProcessorCount k_high;
  AlphaEstimate estimate;
};

/// 1 - alpha from the difference of 1/R between consecutive points. Needs no
/// single-processor timing.
inline std::vector<IntervalEstimate> pairwise_alpha(const ScalingSeries& series) {
  if (series.size() < 2) {
    throw InsufficientDataError("pairwise_alpha: series '" + series.label() +
                                "' needs at least 2 points");
  }
  const auto pts = series.points();
  std::vector<IntervalEstimate> out;
  out.reserve(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double y0 = ScalingSeries::inverse_efficiency_of(pts[i], series.kind());
    const double y1 = ScalingSeries::inverse_efficiency_of(pts[i + 1], series.kind());
    const double dk = pts[i + 1].k.as_double() - pts[i].k.as_double();
    out.push_back({pts[i].k, pts[i + 1].k,
                   AlphaEstimate::from_one_minus_alpha((y1 - y0) / dk,
                                                       Method::PairwiseDifference)});
  }
  return out;
}

/// Least-squares line through (k, 1/R). The slope estimates 1 - alpha and the
/// intercept estimates alpha.
struct SlopeEstimate {
  AlphaEstimate estimate;
  double intercept = 0.0;
  /// Absent when 1/R is identical at every point.
  std::optional<double> r_squared;
  std::size_t n = 0;
};

/// Fits raw points that need not satisfy the series invariants; repeated k
/// values are allowed, and all-equal k is a degenerate fit.
inline SlopeEstimate slope_alpha(std::span<const ScalingPoint> points, SeriesKind kind) {
  if (points.size() < 2) {
    throw InsufficientDataError("slope_alpha: need at least 2 points, got " +
                                std::to_string(points.size()));
  }
  std::vector<double> x, y;
  x.reserve(points.size());
  y.reserve(points.size());
  for (const auto& p : points) {
    x.push_back(p.k.as_double());
    y.push_back(ScalingSeries::inverse_efficiency_of(p, kind));
  }
  const auto fit = fit_line<double>(x, y);
  return {AlphaEstimate::from_one_minus_alpha(fit.slope, Method::InverseEfficiencySlope),
          fit.intercept, fit.r_squared, fit.n};
}

inline SlopeEstimate slope_alpha(const ScalingSeries& series) {
  return slope_alpha(series.points(), series.kind());
}

struct PointValue {
  ProcessorCount k;
  double value;
};

/// The traditional 1 - S/k metric. Grows with k even when alpha is constant,
/// so it does not characterize a setup by a single number.
inline std::vector<PointValue> one_minus_efficiency(const ScalingSeries& series) {
  std::vector<PointValue> out;
  out.reserve(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    out.push_back({series.points()[i].k, 1.0 - series.efficiency(i)});
  }
  return out;
}

/// Closed-form alpha_eff at every point with k >= 2 (k = 1 points are
/// skipped): from the speedup for speedup series, from R otherwise.
inline std::vector<std::pair<ProcessorCount, AlphaEstimate>> closed_form_alpha(
    const ScalingSeries& series) {
  std::vector<std::pair<ProcessorCount, AlphaEstimate>> out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto k = series.points()[i].k;
    if (k.value() < 2) continue;
    const double v = series.points()[i].value;
    out.emplace_back(k, series.kind() == SeriesKind::Speedup
                            ? alpha_eff_from_speedup(k, Speedup{v})
                            : alpha_from_efficiency(k, Efficiency{v}));
  }
  return out;
}

}  // namespace alphaeff
