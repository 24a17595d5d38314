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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace alphaeff::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDataError = 1;
inline constexpr int kUsageError = 2;

/// Bad flags or flag combinations; maps to kUsageError.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Svg };

struct GlobalOptions {
  std::optional<std::filesystem::path> out_dir;
  Format format = Format::Csv;
  bool force = false;
};

struct AlphaOptions {
  std::int64_t k = 0;
  std::optional<double> speedup;
  std::optional<double> efficiency;
};

struct SeriesOptions {
  std::string input;  // path, or "-" for stdin
  std::string method = "all";
};

struct RankingOptions {
  std::string input;
  std::string url;
  bool hillside = false;
  bool timeline = false;
  bool trend = false;
  std::optional<int> forecast_year;
  int max_rank = 25;
  int top = 3;
  std::string trend_source = "best";
  bool refresh = false;
  std::filesystem::path cache_dir;
};

struct SynthOptions {
  std::string kind = "series";
  // series
  std::optional<double> alpha;
  std::vector<std::int64_t> ks;
  double noise = 0.0;
  std::uint64_t seed = 0;
  // ranking
  std::string years = "1993:2016";
  int year_from = 1993;
  double oma_from = 1e-3;
  int year_to = 2016;
  double oma_to = 1e-7;
  int ranks = 1;
  double rank_factor = 1.0;
  std::int64_t cores = 1'000'000;
};

/// Each command writes results to `out` (or to files under the output
/// directory) and diagnostics to `err`. They throw UsageError or
/// alphaeff::Error; main maps those to exit codes.
void cmd_alpha(const GlobalOptions& g, const AlphaOptions& o, std::ostream& out, std::ostream& err);
void cmd_series(const GlobalOptions& g, const SeriesOptions& o, std::ostream& out, std::ostream& err);
void cmd_ranking(const GlobalOptions& g, const RankingOptions& o, std::ostream& out,
                 std::ostream& err);
void cmd_synth(const GlobalOptions& g, const SynthOptions& o, std::ostream& out, std::ostream& err);

/// Cache directory: $ALPHAEFF_CACHE_DIR, else $XDG_CACHE_HOME/alphaeff, else
/// $HOME/.cache/alphaeff, else ./.alphaeff-cache.
std::filesystem::path default_cache_dir();

}  // namespace alphaeff::cli
