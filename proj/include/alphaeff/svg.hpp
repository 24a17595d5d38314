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

// Static SVG views of the CSV outputs: line charts with optional log axes
// and a year x rank heatmap. Output is a pure function of the input data.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphaeff/csv.hpp"
#include "alphaeff/timeline.hpp"

namespace alphaeff::svg {

enum class Scale { Linear, Log2, Log10 };

struct Axis {
  std::string label;
  Scale scale = Scale::Linear;
};

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

struct LineChart {
  std::string title;
  Axis x;
  Axis y;
  std::vector<Series> series;
};

inline std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

namespace detail {

inline constexpr double kWidth = 640, kHeight = 420;
inline constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;
inline constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

inline bool drawable(double v, Scale s) { return std::isfinite(v) && (s == Scale::Linear || v > 0); }

inline double transform(double v, Scale s) {
  switch (s) {
    case Scale::Log2: return std::log2(v);
    case Scale::Log10: return std::log10(v);
    default: return v;
  }
}

inline std::string tick_label(double t, Scale s) {
  switch (s) {
    case Scale::Log2: return csv::format_fixed(std::exp2(t), 0);
    case Scale::Log10: return "1e" + std::to_string(static_cast<int>(std::lround(t)));
    default: {
      const double r = std::round(t);
      return std::abs(t - r) < 1e-9 ? csv::format_fixed(r, 0) : csv::format_fixed(t, 2);
    }
  }
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void widen(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

// Log axes snap to whole powers; linear axes get 5 even intervals.
inline std::vector<double> ticks(Range& r, Scale s) {
  if (!(r.lo <= r.hi)) r = {0, 1};
  if (s != Scale::Linear) {
    r.lo = std::floor(r.lo);
    r.hi = std::ceil(r.hi);
    if (r.lo == r.hi) r.hi += 1;
    std::vector<double> t;
    const double step = std::max(1.0, std::ceil((r.hi - r.lo) / 10));
    for (double v = r.lo; v <= r.hi + 1e-9; v += step) t.push_back(v);
    return t;
  }
  if (r.lo == r.hi) {
    r.lo -= 0.5;
    r.hi += 0.5;
  }
  std::vector<double> t;
  for (int i = 0; i <= 5; ++i) t.push_back(r.lo + (r.hi - r.lo) * i / 5);
  return t;
}

inline std::string text(double x, double y, std::string_view body, std::string_view extra = {}) {
  return "<text x=\"" + csv::format_fixed(x) + "\" y=\"" + csv::format_fixed(y) + "\"" +
         std::string(extra) + ">" + escape(body) + "</text>\n";
}

inline std::string header(std::string_view title) {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    csv::format_fixed(kWidth, 0) + "\" height=\"" + csv::format_fixed(kHeight, 0) +
                    "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += text(kWidth / 2, 22, title, " text-anchor=\"middle\" font-size=\"14\"");
  return out;
}

}  // namespace detail

inline std::string render(const LineChart& chart) {
  using namespace detail;
  Range xr, yr;
  for (const auto& s : chart.series) {
    for (const auto& [x, y] : s.points) {
      if (drawable(x, chart.x.scale) && drawable(y, chart.y.scale)) {
        xr.widen(transform(x, chart.x.scale));
        yr.widen(transform(y, chart.y.scale));
      }
    }
  }
  const auto xt = ticks(xr, chart.x.scale);
  const auto yt = ticks(yr, chart.y.scale);
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  const auto px = [&](double t) { return kLeft + (t - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto py = [&](double t) { return kTop + ph - (t - yr.lo) / (yr.hi - yr.lo) * ph; };

  std::string out = header(chart.title);
  out += "<rect x=\"" + csv::format_fixed(kLeft) + "\" y=\"" + csv::format_fixed(kTop) +
         "\" width=\"" + csv::format_fixed(pw) + "\" height=\"" + csv::format_fixed(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : xt) {
    const auto x = csv::format_fixed(px(t));
    out += "<line x1=\"" + x + "\" y1=\"" + csv::format_fixed(kTop) + "\" x2=\"" + x + "\" y2=\"" +
           csv::format_fixed(kTop + ph) + "\" stroke=\"#ddd\"/>\n";
    out += text(px(t), kTop + ph + 16, tick_label(t, chart.x.scale), " text-anchor=\"middle\"");
  }
  for (double t : yt) {
    const auto y = csv::format_fixed(py(t));
    out += "<line x1=\"" + csv::format_fixed(kLeft) + "\" y1=\"" + y + "\" x2=\"" +
           csv::format_fixed(kLeft + pw) + "\" y2=\"" + y + "\" stroke=\"#ddd\"/>\n";
    out += text(kLeft - 6, py(t) + 4, tick_label(t, chart.y.scale), " text-anchor=\"end\"");
  }
  out += text(kLeft + pw / 2, kHeight - 18, chart.x.label, " text-anchor=\"middle\"");
  out += text(18, kTop + ph / 2, chart.y.label,
              " text-anchor=\"middle\" transform=\"rotate(-90 18 " + csv::format_fixed(kTop + ph / 2) +
                  ")\"");

  for (std::size_t i = 0; i < chart.series.size(); ++i) {
    const auto& s = chart.series[i];
    const char* color = kPalette[i % kPalette.size()];
    std::string pts;
    for (const auto& [x, y] : s.points) {
      if (!drawable(x, chart.x.scale) || !drawable(y, chart.y.scale)) continue;
      const auto cx = csv::format_fixed(px(transform(x, chart.x.scale)));
      const auto cy = csv::format_fixed(py(transform(y, chart.y.scale)));
      if (!pts.empty()) pts += ' ';
      pts += cx + ',' + cy;
      out += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
    if (!pts.empty()) {
      out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
             "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    }
    const double ly = kTop + 10 + 18 * static_cast<double>(i);
    out += "<line x1=\"" + csv::format_fixed(kLeft + pw + 12) + "\" y1=\"" + csv::format_fixed(ly) +
           "\" x2=\"" + csv::format_fixed(kLeft + pw + 32) + "\" y2=\"" + csv::format_fixed(ly) +
           "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += text(kLeft + pw + 38, ly + 4, s.name);
  }
  out += "</svg>\n";
  return out;
}

/// Blue (small) to red (large) on a log10 scale.
inline std::string heat_color(double frac) {
  frac = std::clamp(frac, 0.0, 1.0);
  const auto channel = [](double v) {
    const int c = static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255));
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string{kHex[c >> 4], kHex[c & 0xF]};
  };
  const double r = std::clamp(1.5 - std::abs(4 * frac - 3), 0.0, 1.0);
  const double g = std::clamp(1.5 - std::abs(4 * frac - 2), 0.0, 1.0);
  const double b = std::clamp(1.5 - std::abs(4 * frac - 1), 0.0, 1.0);
  return "#" + channel(r) + channel(g) + channel(b);
}

/// 2-D heatmap of the hillside: year across, rank down, color = log10(1 - alpha).
inline std::string render(const HillsideSurface& s, std::string_view title) {
  using namespace detail;
  Range zr;
  for (const auto& c : s.cells) {
    if (c) zr.widen(std::log10(*c));
  }
  if (!(zr.lo <= zr.hi)) zr = {0, 1};
  if (zr.lo == zr.hi) zr.hi = zr.lo + 1;

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  const double cw = pw / static_cast<double>(std::max<std::size_t>(1, s.years.size()));
  const double ch = ph / static_cast<double>(std::max<std::size_t>(1, s.ranks.size()));

  std::string out = header(title);
  for (std::size_t y = 0; y < s.years.size(); ++y) {
    for (std::size_t r = 0; r < s.ranks.size(); ++r) {
      const auto& c = s.at(y, r);
      const std::string fill =
          c ? heat_color((std::log10(*c) - zr.lo) / (zr.hi - zr.lo)) : std::string("#eeeeee");
      out += "<rect x=\"" + csv::format_fixed(kLeft + cw * static_cast<double>(y)) + "\" y=\"" +
             csv::format_fixed(kTop + ch * static_cast<double>(r)) + "\" width=\"" +
             csv::format_fixed(cw) + "\" height=\"" + csv::format_fixed(ch) + "\" fill=\"" + fill +
             "\"><title>" + std::to_string(s.years[y]) + " rank " + std::to_string(s.ranks[r]) +
             ": " + (c ? csv::format_sci(*c) : std::string("n/a")) + "</title></rect>\n";
    }
  }
  const std::size_t ystep = std::max<std::size_t>(1, (s.years.size() + 9) / 10);
  for (std::size_t y = 0; y < s.years.size(); y += ystep) {
    out += text(kLeft + cw * (static_cast<double>(y) + 0.5), kTop + ph + 16,
                std::to_string(s.years[y]), " text-anchor=\"middle\"");
  }
  const std::size_t rstep = std::max<std::size_t>(1, (s.ranks.size() + 9) / 10);
  for (std::size_t r = 0; r < s.ranks.size(); r += rstep) {
    out += text(kLeft - 6, kTop + ch * (static_cast<double>(r) + 0.5) + 4,
                std::to_string(s.ranks[r]), " text-anchor=\"end\"");
  }
  out += text(kLeft + pw / 2, kHeight - 18, "Year", " text-anchor=\"middle\"");
  out += text(18, kTop + ph / 2, "Rank",
              " text-anchor=\"middle\" transform=\"rotate(-90 18 " + csv::format_fixed(kTop + ph / 2) +
                  ")\"");
  // Color key.
  const double kx = kLeft + pw + 20;
  for (int i = 0; i <= 10; ++i) {
    const double f = 1.0 - i / 10.0;
    out += "<rect x=\"" + csv::format_fixed(kx) + "\" y=\"" + csv::format_fixed(kTop + 20 * i) +
           "\" width=\"20\" height=\"20\" fill=\"" + heat_color(f) + "\"/>\n";
    out += text(kx + 26, kTop + 20 * i + 14,
                csv::format_sci(std::pow(10.0, zr.lo + f * (zr.hi - zr.lo))));
  }
  out += text(kx, kTop - 8, "1 - alpha");
  out += "</svg>\n";
  return out;
}

}  // namespace alphaeff::svg
