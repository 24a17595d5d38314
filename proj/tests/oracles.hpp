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
// Independent reference computations for the tests. Nothing here calls into
// the library: each oracle re-derives its value from first principles in
// long double so the tests do not share a code path with what they check.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

/// alpha_eff(S) = k/(k-1) * (S-1)/S, written out directly.
inline long double alpha_eff(long double k, long double s) { return k / (k - 1) * (s - 1) / s; }

/// Speedup whose alpha_eff equals `alpha`, found by bisection on [1, k].
/// alpha_eff is increasing in S, so plain bisection converges.
inline long double speedup_by_bisection(long double k, long double alpha) {
  long double lo = 1, hi = k;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    (alpha_eff(k, mid) < alpha ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

/// Same, but targeting a sequential fraction: bisection on
/// 1 - alpha_eff(S) = (k - S) / ((k - 1) S), decreasing in S.
inline long double speedup_for_sequential_fraction(long double k, long double one_minus_alpha) {
  long double lo = 1, hi = k;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    ((k - mid) / ((k - 1) * mid) > one_minus_alpha ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

/// 1/R = k(1 - alpha) + alpha, evaluated by hand.
inline long double inverse_efficiency(long double k, long double alpha) {
  return k * (1 - alpha) + alpha;
}

/// Least-squares slope by the textbook normal equations (uncentered sums).
inline long double ls_slope(const std::vector<long double>& x, const std::vector<long double>& y) {
  long double n = static_cast<long double>(x.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
