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
#include <gtest/gtest.h>

#include <string>

#include "alphaeff/svg.hpp"

using namespace alphaeff;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Svg, LineChartIsWellFormedAndDeterministic) {
  svg::LineChart chart{"1 - alpha <by> k",
                       {"k", svg::Scale::Log2},
                       {"1 - alpha", svg::Scale::Log10},
                       {{"pairwise", {{2, 1e-2}, {4, 1.1e-2}, {8, 0.9e-2}}},
                        {"slope & fit", {{2, 1e-2}, {8, 1e-2}}}}};
  const auto a = svg::render(chart);
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  EXPECT_NE(a.find("&lt;by&gt;"), std::string::npos);
  EXPECT_NE(a.find("slope &amp; fit"), std::string::npos);
  EXPECT_EQ(count(a, "<polyline"), 2u);
  EXPECT_EQ(a, svg::render(chart));
}

TEST(Svg, LogAxisDropsNonPositivePoints) {
  svg::LineChart chart{"t", {"x", svg::Scale::Linear}, {"y", svg::Scale::Log10},
                       {{"s", {{1, 0.0}, {2, -1.0}, {3, 1e-3}, {4, 1e-4}}}}};
  const auto out = svg::render(chart);
  EXPECT_EQ(out.find("nan"), std::string::npos);
  EXPECT_EQ(out.find("inf"), std::string::npos);
}

TEST(Svg, EmptyChartStillRenders) {
  const auto out = svg::render(svg::LineChart{"empty", {}, {}, {}});
  EXPECT_NE(out.find("</svg>"), std::string::npos);
}

TEST(Svg, Hillside) {
  const std::vector<AlphaRecord> rows = {
      {2015, 1, "a", AlphaEstimate::from_one_minus_alpha(1e-6, Method::ClosedFormEfficiency)},
      {2016, 1, "b", AlphaEstimate::from_one_minus_alpha(1e-7, Method::ClosedFormEfficiency)},
      {2016, 2, "c", AlphaEstimate::from_one_minus_alpha(1e-5, Method::ClosedFormEfficiency)}};
  const auto out = svg::render(build_hillside(rows, 2), "hill");
  EXPECT_EQ(out.rfind("<svg", 0), 0u);
  EXPECT_NE(out.find("</svg>"), std::string::npos);
  EXPECT_EQ(out.find("nan"), std::string::npos);
  EXPECT_EQ(svg::heat_color(0.0), svg::heat_color(0.0));
  EXPECT_NE(svg::heat_color(0.0), svg::heat_color(1.0));
}
