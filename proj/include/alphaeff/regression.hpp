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

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "alphaeff/error.hpp"

namespace alphaeff {

/// Result of an unweighted least-squares fit y = intercept + slope * x.
///
/// The centroid (x_mean, y_mean) is kept because evaluating the line as
/// y_mean + slope * (x - x_mean) is far better conditioned than
/// intercept + slope * x when x is a calendar year.
template <std::floating_point Real>
struct LinearFit {
  Real slope{};
  Real intercept{};
  /// Absent when every y is identical (R^2 = 0/0).
  std::optional<Real> r_squared;
  std::size_t n = 0;
  Real x_mean{};
  Real y_mean{};

  Real operator()(Real x) const { return y_mean + slope * (x - x_mean); }
};

/// Two-pass centered ordinary least squares.
template <std::floating_point Real>
LinearFit<Real> fit_line(std::span<const Real> x, std::span<const Real> y) {
  if (x.size() != y.size()) {
    throw ParameterError("fit_line: x and y differ in length (" + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()) + ")");
  }
  const std::size_t n = x.size();
  if (n < 2) {
    throw InsufficientDataError("fit_line: need at least 2 points, got " + std::to_string(n));
  }

  const bool constant_y = std::all_of(y.begin(), y.end(), [&](Real v) { return v == y[0]; });

  Real sx{}, sy{};
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  LinearFit<Real> fit;
  fit.n = n;
  fit.x_mean = sx / static_cast<Real>(n);
  fit.y_mean = constant_y ? y[0] : sy / static_cast<Real>(n);

  Real sxx{}, sxy{}, syy{};
  for (std::size_t i = 0; i < n; ++i) {
    const Real dx = x[i] - fit.x_mean;
    const Real dy = y[i] - fit.y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > Real{0})) {
    throw DegenerateFitError("fit_line: all x values are equal, slope is undefined");
  }

  fit.slope = sxy / sxx;
  fit.intercept = fit.y_mean - fit.slope * fit.x_mean;

  if (!constant_y) {
    Real ss_res{};
    for (std::size_t i = 0; i < n; ++i) {
      const Real r = y[i] - fit(x[i]);
      ss_res += r * r;
    }
    fit.r_squared = std::clamp(Real{1} - ss_res / syy, Real{0}, Real{1});
  }
  return fit;
}

}  // namespace alphaeff
