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

// (1 - alpha) of ranked machines over time: the year x rank surface, the
// per-rank and best-of-year timelines, and a log10-linear trend fitted to a
// timeline with forecasting.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alphaeff/csv.hpp"
#include "alphaeff/error.hpp"
#include "alphaeff/ingest.hpp"
#include "alphaeff/regression.hpp"

namespace alphaeff {

/// True when the estimate can be drawn on a log axis.
inline bool plottable(const AlphaEstimate& e) {
  return e.in_model && e.one_minus_alpha > 0.0 && std::isfinite(e.one_minus_alpha);
}

// ---------------------------------------------------------------------------
// Hillside surface

struct HillsideSurface {
  std::vector<int> years;  // ascending
  std::vector<int> ranks;  // 1..max_rank
  /// Row-major, years.size() x ranks.size(). Present cells are > 0 and finite.
  std::vector<std::optional<double>> cells;
  /// Records within the rank range that were out of model or not > 0.
  std::size_t skipped = 0;
  /// Records ranked below max_rank.
  std::size_t beyond_max_rank = 0;

  const std::optional<double>& at(std::size_t year_index, std::size_t rank_index) const {
    return cells[year_index * ranks.size() + rank_index];
  }

  std::optional<double> find(int year, int rank) const {
    const auto y = std::lower_bound(years.begin(), years.end(), year);
    if (y == years.end() || *y != year || rank < 1 || rank > static_cast<int>(ranks.size())) {
      return std::nullopt;
    }
    return at(static_cast<std::size_t>(y - years.begin()), static_cast<std::size_t>(rank - 1));
  }
};

inline HillsideSurface build_hillside(std::span<const AlphaRecord> alphas, int max_rank) {
  if (max_rank < 1) {
    throw ParameterError("build_hillside: max_rank must be >= 1, got " + std::to_string(max_rank));
  }
  if (alphas.empty()) throw InsufficientDataError("build_hillside: no records");

  HillsideSurface s;
  std::set<int> years;
  std::set<std::pair<int, int>> seen;
  for (const auto& a : alphas) {
    years.insert(a.year);
    if (!seen.emplace(a.year, a.rank).second) {
      throw ParameterError("build_hillside: duplicate (year, rank) = (" + std::to_string(a.year) +
                           ", " + std::to_string(a.rank) + ")");
    }
  }
  s.years.assign(years.begin(), years.end());
  for (int r = 1; r <= max_rank; ++r) s.ranks.push_back(r);
  s.cells.assign(s.years.size() * s.ranks.size(), std::nullopt);

  for (const auto& a : alphas) {
    if (a.rank > max_rank) {
      ++s.beyond_max_rank;
      continue;
    }
    if (!plottable(a.estimate)) {
      ++s.skipped;
      continue;
    }
    const auto yi = static_cast<std::size_t>(
        std::lower_bound(s.years.begin(), s.years.end(), a.year) - s.years.begin());
    s.cells[yi * s.ranks.size() + static_cast<std::size_t>(a.rank - 1)] =
        a.estimate.one_minus_alpha;
  }
  return s;
}

/// Long form `year,rank,one_minus_alpha`; absent cells are omitted.
inline std::string write_hillside_csv(const HillsideSurface& s) {
  std::string out = "year,rank,one_minus_alpha\n";
  for (std::size_t y = 0; y < s.years.size(); ++y) {
    for (std::size_t r = 0; r < s.ranks.size(); ++r) {
      if (const auto& v = s.at(y, r)) {
        out += std::to_string(s.years[y]) + ',' + std::to_string(s.ranks[r]) + ',' +
               csv::format_sci(*v) + '\n';
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Timelines

struct TimelinePoint {
  int year = 0;
  int rank = 0;
  std::string name;
  double one_minus_alpha = 0.0;
};

struct TimelineSeries {
  std::string label;
  /// Ascending by year, one point per year, every value > 0.
  std::vector<TimelinePoint> points;
  /// Years present in the input for which this series has no point.
  std::vector<int> omitted_years;
  /// In-model records left out because 1 - alpha was not > 0 (Rmax == Rpeak).
  std::vector<TimelinePoint> nonpositive;
};

namespace detail {

inline std::map<int, std::vector<const AlphaRecord*>> group_by_year(
    std::span<const AlphaRecord> alphas) {
  std::map<int, std::vector<const AlphaRecord*>> by_year;
  for (const auto& a : alphas) by_year[a.year].push_back(&a);
  return by_year;
}

inline TimelinePoint to_point(const AlphaRecord& a) {
  return {a.year, a.rank, a.name, a.estimate.one_minus_alpha};
}

inline void note_nonpositive(TimelineSeries& series, const AlphaRecord& a) {
  if (a.estimate.in_model && !(a.estimate.one_minus_alpha > 0.0)) {
    series.nonpositive.push_back(to_point(a));
  }
}

}  // namespace detail

inline std::string ordinal(int n) {
  const int mod100 = n % 100;
  const char* suffix = "th";
  if (mod100 < 11 || mod100 > 13) {
    switch (n % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
      default: break;
    }
  }
  return std::to_string(n) + suffix;
}

/// Smallest in-model (1 - alpha) of each year; ties go to the better rank.
/// Years with no usable record land in omitted_years.
inline TimelineSeries best_of_year(std::span<const AlphaRecord> alphas) {
  TimelineSeries series{"best", {}, {}, {}};
  for (const auto& [year, records] : detail::group_by_year(alphas)) {
    const AlphaRecord* best = nullptr;
    for (const AlphaRecord* a : records) {
      detail::note_nonpositive(series, *a);
      if (!plottable(a->estimate)) continue;
      if (best == nullptr || a->estimate.one_minus_alpha < best->estimate.one_minus_alpha ||
          (a->estimate.one_minus_alpha == best->estimate.one_minus_alpha && a->rank < best->rank)) {
        best = a;
      }
    }
    if (best != nullptr) {
      series.points.push_back(detail::to_point(*best));
    } else {
      series.omitted_years.push_back(year);
    }
  }
  return series;
}

/// Series i (1-based) follows the rank-i machine through the years.
inline std::vector<TimelineSeries> top_n_series(std::span<const AlphaRecord> alphas, int n) {
  if (n < 1) throw ParameterError("top_n_series: n must be >= 1, got " + std::to_string(n));
  const auto by_year = detail::group_by_year(alphas);
  std::vector<TimelineSeries> out;
  for (int rank = 1; rank <= n; ++rank) {
    TimelineSeries series{ordinal(rank), {}, {}, {}};
    for (const auto& [year, records] : by_year) {
      const auto it = std::find_if(records.begin(), records.end(),
                                   [&](const AlphaRecord* a) { return a->rank == rank; });
      if (it != records.end()) detail::note_nonpositive(series, **it);
      if (it != records.end() && plottable((*it)->estimate)) {
        series.points.push_back(detail::to_point(**it));
      } else {
        series.omitted_years.push_back(year);
      }
    }
    out.push_back(std::move(series));
  }
  return out;
}

/// Long form `series,year,rank,name,one_minus_alpha`.
inline std::string write_timeline_csv(std::span<const TimelineSeries> series) {
  std::string out = "series,year,rank,name,one_minus_alpha\n";
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      out += csv::quote(s.label) + ',' + std::to_string(p.year) + ',' + std::to_string(p.rank) +
             ',' + csv::quote(p.name) + ',' + csv::format_sci(p.one_minus_alpha) + '\n';
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trend

/// log10(1 - alpha) = intercept + slope * year.
struct TrendModel {
  double slope = 0.0;      // decades per year
  double intercept = 0.0;  // log10(1 - alpha) at year 0
  /// Absent for a constant series.
  std::optional<double> r_squared;
  std::size_t n = 0;
  int year_min = 0;
  int year_max = 0;
  /// Centroid of the fitted data. Predictions are evaluated around it, which
  /// keeps them exact at the data instead of losing digits to a year-0
  /// intercept in the hundreds.
  double anchor_year = 0.0;
  double anchor_log10 = 0.0;

  double log10_at(double year) const { return anchor_log10 + slope * (year - anchor_year); }
};

inline TrendModel fit_trend(std::span<const TimelinePoint> points) {
  if (points.size() < 2) {
    throw InsufficientDataError("fit_trend: need at least 2 points, got " +
                                std::to_string(points.size()));
  }
  std::vector<double> x, y;
  x.reserve(points.size());
  y.reserve(points.size());
  for (const auto& p : points) {
    if (!(p.one_minus_alpha > 0.0) || !std::isfinite(p.one_minus_alpha)) {
      throw DomainError("fit_trend: cannot take log10 of 1 - alpha = " +
                        csv::format_sci(p.one_minus_alpha) + " (year " + std::to_string(p.year) +
                        ", rank " + std::to_string(p.rank) +
                        (p.name.empty() ? std::string() : ", '" + p.name + "'") + ")");
    }
    x.push_back(static_cast<double>(p.year));
    y.push_back(std::log10(p.one_minus_alpha));
  }
  const auto fit = fit_line<double>(x, y);
  const auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                            [](const auto& a, const auto& b) { return a.year < b.year; });
  return {fit.slope, fit.intercept, fit.r_squared, fit.n, lo->year, hi->year, fit.x_mean,
          fit.y_mean};
}

inline TrendModel fit_trend(const TimelineSeries& series) { return fit_trend(series.points); }

struct Forecast {
  double one_minus_alpha = 0.0;
  /// The year lies outside [year_min, year_max] of the model.
  bool extrapolated = false;
};

inline Forecast forecast(const TrendModel& model, double year) {
  return {std::pow(10.0, model.log10_at(year)),
          year < model.year_min || year > model.year_max};
}

inline std::string write_trend_csv(const TrendModel& m) {
  return "slope_decades_per_year,intercept_log10,r_squared,n,year_min,year_max\n" +
         csv::format_sci(m.slope) + ',' + csv::format_sci(m.intercept) + ',' +
         (m.r_squared ? csv::format_sci(*m.r_squared) : std::string("nan")) + ',' +
         std::to_string(m.n) + ',' + std::to_string(m.year_min) + ',' +
         std::to_string(m.year_max) + '\n';
}

}  // namespace alphaeff
