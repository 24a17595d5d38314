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

// Synthetic data with a known parallel fraction, used as ground truth for
// the estimators and the ranking pipeline.
//
// Random numbers: std::mt19937_64 seeded with SynthSpec::seed (its output
// sequence is fixed by the C++ standard). Each 64-bit draw x becomes
// u = (x >> 11) * 2^-53 in [0, 1) and eps = noise_rel * (2u - 1). The
// standard distributions are not used because their output is
// implementation-defined.

#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "alphaeff/amdahl.hpp"
#include "alphaeff/csv.hpp"
#include "alphaeff/error.hpp"
#include "alphaeff/ingest.hpp"

namespace alphaeff {

struct SynthSpec {
  double alpha_true = 1.0;
  std::vector<std::int64_t> ks;
  /// Multiplicative uniform noise amplitude on S, in [0, 1).
  double noise_rel = 0.0;
  std::uint64_t seed = 0;

  void validate() const {
    if (!std::isfinite(alpha_true) || alpha_true < 0.0 || alpha_true > 1.0) {
      throw ParameterError("synth: alpha must be in [0, 1], got " + csv::format_exact(alpha_true));
    }
    if (ks.empty()) throw ParameterError("synth: at least one processor count is required");
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (ks[i] < 2) {
        throw ParameterError("synth: processor counts must be >= 2, got " + std::to_string(ks[i]));
      }
      if (i > 0 && ks[i] <= ks[i - 1]) {
        throw ParameterError("synth: processor counts must be strictly increasing");
      }
    }
    if (!std::isfinite(noise_rel) || noise_rel < 0.0 || noise_rel >= 1.0) {
      throw ParameterError("synth: noise must be in [0, 1), got " + csv::format_exact(noise_rel));
    }
  }
};

/// Uniform in [0, 1) from one 64-bit draw.
inline double unit_uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// S_i = speedup_from_alpha(k_i, alpha_true) * (1 + eps_i).
inline ScalingSeries generate_series(const SynthSpec& spec) {
  spec.validate();
  std::mt19937_64 engine(spec.seed);
  std::vector<ScalingPoint> points;
  points.reserve(spec.ks.size());
  for (const auto k : spec.ks) {
    const double eps = spec.noise_rel * (2.0 * unit_uniform(engine) - 1.0);
    const ProcessorCount pk{k};
    points.push_back({pk, speedup_from_alpha(pk, spec.alpha_true).value * (1.0 + eps)});
  }
  return ScalingSeries("synthetic alpha=" + csv::format_exact(spec.alpha_true), SeriesKind::Speedup,
                       std::move(points));
}

struct YearRank {
  int year = 0;
  int rank = 0;
  friend auto operator<=>(const YearRank&, const YearRank&) = default;
};

/// Rpeak of every synthetic machine. A power of two, so Rmax/Rpeak gives back
/// the planted efficiency exactly.
inline constexpr double kNominalRpeakTflops = 1024.0;

/// Builds a ranking list whose Rmax/Rpeak reproduce the planted (1 - alpha).
/// The schedule is given as 1 - alpha, not alpha: values like 3e-8 do not
/// survive the trip through alpha = 1 - 3e-8 in double precision.
inline RankingDataset generate_ranking(const std::map<YearRank, double>& one_minus_alpha_by_year_rank,
                                       const std::map<YearRank, std::int64_t>& cores_by_year_rank) {
  RankingDataset dataset;
  dataset.source = "synthetic";
  for (const auto& [key, oma] : one_minus_alpha_by_year_rank) {
    const auto where = "(" + std::to_string(key.year) + ", " + std::to_string(key.rank) + ")";
    const auto c = cores_by_year_rank.find(key);
    if (c == cores_by_year_rank.end()) {
      throw ParameterError("generate_ranking: no core count for " + where);
    }
    if (!std::isfinite(oma) || !(oma > 0.0) || oma > 1.0) {
      throw ParameterError("generate_ranking: 1 - alpha must be in (0, 1] at " + where);
    }
    if (c->second < 2) throw ParameterError("generate_ranking: cores must be >= 2 at " + where);
    if (key.rank < 1) throw ParameterError("generate_ranking: rank must be >= 1 at " + where);

    const double r = efficiency_from_one_minus_alpha(ProcessorCount{c->second}, oma).value;
    dataset.records.push_back({key.year, key.rank,
                               "synthetic-" + std::to_string(key.year) + "-" + std::to_string(key.rank),
                               kNominalRpeakTflops * r, kNominalRpeakTflops, c->second, false});
  }
  if (cores_by_year_rank.size() != one_minus_alpha_by_year_rank.size()) {
    throw ParameterError("generate_ranking: core counts given for entries without 1 - alpha");
  }
  if (dataset.records.empty()) throw ParameterError("generate_ranking: empty schedule");
  return dataset;
}

/// A log10-linear schedule through (year_from, oma_from) and (year_to,
/// oma_to). Rank r is worse than rank 1 by rank_factor^(r - 1).
struct RankingSchedule {
  int year_from = 1993;
  double oma_from = 1e-3;
  int year_to = 2016;
  double oma_to = 1e-7;
  std::vector<int> years;
  int ranks = 1;
  double rank_factor = 1.0;
  std::int64_t cores = 1'000'000;

  double slope() const {
    return (std::log10(oma_to) - std::log10(oma_from)) / static_cast<double>(year_to - year_from);
  }
  double intercept() const { return std::log10(oma_from) - slope() * year_from; }

  double one_minus_alpha(int year, int rank) const {
    const double t = static_cast<double>(year - year_from) / static_cast<double>(year_to - year_from);
    const double lg = std::log10(oma_from) + t * (std::log10(oma_to) - std::log10(oma_from));
    return std::pow(10.0, lg) * std::pow(rank_factor, rank - 1);
  }
};

inline RankingDataset generate_ranking(const RankingSchedule& schedule) {
  if (schedule.year_to == schedule.year_from) {
    throw ParameterError("ranking schedule: year_from and year_to must differ");
  }
  if (!(schedule.oma_from > 0.0) || !(schedule.oma_to > 0.0) || !(schedule.rank_factor > 0.0)) {
    throw ParameterError("ranking schedule: 1 - alpha endpoints and rank factor must be > 0");
  }
  if (schedule.ranks < 1) throw ParameterError("ranking schedule: ranks must be >= 1");
  std::map<YearRank, double> oma;
  std::map<YearRank, std::int64_t> cores;
  for (const int year : schedule.years) {
    for (int rank = 1; rank <= schedule.ranks; ++rank) {
      oma[{year, rank}] = schedule.one_minus_alpha(year, rank);
      cores[{year, rank}] = schedule.cores;
    }
  }
  return generate_ranking(oma, cores);
}

}  // namespace alphaeff
