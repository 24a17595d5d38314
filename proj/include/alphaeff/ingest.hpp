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

// Readers and writers for the two interchange formats:
//
//   scaling CSV   k,speedup            or   k,efficiency
//   ranking CSV   year,rank,name,rmax_tflops,rpeak_tflops,cores
//
// Parsing never throws on a bad data row; such rows are rejected and
// accounted for in the IngestReport. Only a bad header or an input with no
// surviving rows raises.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "alphaeff/amdahl.hpp"
#include "alphaeff/csv.hpp"
#include "alphaeff/error.hpp"

namespace alphaeff {

struct IngestWarning {
  std::size_t line;
  std::string reason;
};

struct IngestReport {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  /// Rejections and non-fatal flags, in input order.
  std::vector<IngestWarning> warnings;

  std::string summary() const {
    std::ostringstream os;
    os << "accepted " << accepted << ", rejected " << rejected;
    for (const auto& w : warnings) os << "\n  line " << w.line << ": " << w.reason;
    return os.str();
  }
};

/// Raised when a file parses but every data row was rejected.
class NoAcceptedRowsError : public EmptyDataError {
 public:
  NoAcceptedRowsError(const std::string& what, IngestReport report)
      : EmptyDataError(what + " (" + report.summary() + ")"), report_(std::move(report)) {}

  const IngestReport& report() const { return report_; }

 private:
  IngestReport report_;
};

// ---------------------------------------------------------------------------
// Scaling series

struct ParsedSeries {
  ScalingSeries series;
  IngestReport report;
};

/// Reads a `k,speedup` or `k,efficiency` file (header case-insensitive).
/// If `kind_hint` is given the header must agree with it.
inline ParsedSeries parse_scaling_csv(std::string_view bytes,
                                      std::optional<SeriesKind> kind_hint = std::nullopt,
                                      std::string label = {}) {
  const auto lines = csv::split_lines(bytes);
  auto it = std::find_if(lines.begin(), lines.end(),
                         [](const csv::Line& l) { return !csv::trim(l.text).empty(); });
  if (it == lines.end()) {
    throw FormatError("scaling CSV is empty; expected header 'k,speedup' or 'k,efficiency'");
  }

  SeriesKind kind{};
  const auto header = csv::split_fields(it->text);
  const auto col = [&](std::size_t i) { return csv::to_lower(csv::trim((*header)[i])); };
  if (header && header->size() == 2 && col(0) == "k" && col(1) == "speedup") {
    kind = SeriesKind::Speedup;
  } else if (header && header->size() == 2 && col(0) == "k" && col(1) == "efficiency") {
    kind = SeriesKind::Efficiency;
  } else {
    throw FormatError("unrecognized scaling CSV header '" + std::string(it->text) +
                      "'; expected 'k,speedup' or 'k,efficiency'");
  }
  if (kind_hint && *kind_hint != kind) {
    throw FormatError("scaling CSV holds " + std::string(to_string(kind)) + " values but " +
                      std::string(to_string(*kind_hint)) + " values were requested");
  }

  IngestReport report;
  std::vector<ScalingPoint> points;
  std::map<std::int64_t, std::size_t> seen;  // k -> line
  const auto reject = [&](std::size_t line, std::string reason) {
    ++report.rejected;
    report.warnings.push_back({line, std::move(reason)});
  };

  for (++it; it != lines.end(); ++it) {
    if (csv::trim(it->text).empty()) continue;
    const auto fields = csv::split_fields(it->text);
    if (!fields) {
      reject(it->number, "malformed quoting");
      continue;
    }
    if (fields->size() != 2) {
      reject(it->number, "expected 2 fields, got " + std::to_string(fields->size()));
      continue;
    }
    const auto k = csv::parse_int((*fields)[0]);
    if (!k || *k < 1) {
      reject(it->number, "k must be a positive integer, got '" + (*fields)[0] + "'");
      continue;
    }
    const auto v = csv::parse_double((*fields)[1]);
    if (!v || !(*v > 0.0)) {
      reject(it->number, std::string(to_string(kind)) + " must be a positive number, got '" +
                             (*fields)[1] + "'");
      continue;
    }
    if (const auto prev = seen.find(*k); prev != seen.end()) {
      reject(it->number, "duplicate k = " + std::to_string(*k) + " (first on line " +
                             std::to_string(prev->second) + ")");
      continue;
    }
    seen.emplace(*k, it->number);
    points.push_back({ProcessorCount{*k}, *v});
    ++report.accepted;
  }

  if (points.empty()) {
    throw NoAcceptedRowsError("scaling CSV has no valid data rows", std::move(report));
  }
  std::sort(points.begin(), points.end(),
            [](const ScalingPoint& a, const ScalingPoint& b) { return a.k < b.k; });
  return {ScalingSeries(std::move(label), kind, std::move(points)), std::move(report)};
}

/// Writes the series in the format parse_scaling_csv reads. Values use the
/// shortest exact representation so a re-read gives identical doubles.
inline std::string write_scaling_csv(const ScalingSeries& series) {
  std::string out = "k,";
  out += to_string(series.kind());
  out += '\n';
  for (const auto& p : series.points()) {
    out += std::to_string(p.k.value());
    out += ',';
    out += csv::format_exact(p.value);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ranking lists

struct RankingRecord {
  int year = 0;
  int rank = 0;
  std::string name;
  double rmax_tflops = 0.0;
  double rpeak_tflops = 0.0;
  std::int64_t cores = 0;
  /// Rmax > Rpeak: kept in the dataset but never used to compute alpha.
  bool flagged = false;

  double efficiency() const { return rmax_tflops / rpeak_tflops; }
};

struct RankingDataset {
  /// Sorted by (year, rank); (year, rank) is unique.
  std::vector<RankingRecord> records;
  std::string source;
  std::string retrieved_at;
};

struct ParsedRanking {
  RankingDataset dataset;
  IngestReport report;
};

inline constexpr std::array<std::string_view, 6> kRankingColumns = {
    "year", "rank", "name", "rmax_tflops", "rpeak_tflops", "cores"};

/// Reads a ranking list. Columns are located by header name, so order is
/// free and extra columns are ignored.
inline ParsedRanking parse_ranking_csv(std::string_view bytes, std::string source = {},
                                       std::string retrieved_at = {}) {
  const auto lines = csv::split_lines(bytes);
  auto it = std::find_if(lines.begin(), lines.end(),
                         [](const csv::Line& l) { return !csv::trim(l.text).empty(); });
  if (it == lines.end()) {
    throw FormatError("ranking CSV is empty; expected header 'year,rank,name,rmax_tflops,"
                      "rpeak_tflops,cores'");
  }
  const auto header = csv::split_fields(it->text);
  if (!header) throw FormatError("ranking CSV header has malformed quoting");

  std::array<std::size_t, kRankingColumns.size()> index{};
  std::string missing;
  for (std::size_t c = 0; c < kRankingColumns.size(); ++c) {
    const auto pos = std::find_if(header->begin(), header->end(), [&](const std::string& h) {
      return csv::to_lower(csv::trim(h)) == kRankingColumns[c];
    });
    if (pos == header->end()) {
      if (!missing.empty()) missing += ", ";
      missing += kRankingColumns[c];
    } else {
      index[c] = static_cast<std::size_t>(pos - header->begin());
    }
  }
  if (!missing.empty()) {
    throw FormatError("ranking CSV is missing required column(s): " + missing);
  }

  IngestReport report;
  RankingDataset dataset{{}, std::move(source), std::move(retrieved_at)};
  std::map<std::pair<int, int>, std::size_t> seen;
  const auto reject = [&](std::size_t line, std::string reason) {
    ++report.rejected;
    report.warnings.push_back({line, std::move(reason)});
  };

  for (++it; it != lines.end(); ++it) {
    if (csv::trim(it->text).empty()) continue;
    const auto fields = csv::split_fields(it->text);
    if (!fields) {
      reject(it->number, "malformed quoting");
      continue;
    }
    if (fields->size() != header->size()) {
      reject(it->number, "expected " + std::to_string(header->size()) + " fields, got " +
                             std::to_string(fields->size()));
      continue;
    }
    const auto field = [&](std::size_t c) -> const std::string& { return (*fields)[index[c]]; };

    const auto year = csv::parse_int(field(0));
    const auto rank = csv::parse_int(field(1));
    const auto rmax = csv::parse_double(field(3));
    const auto rpeak = csv::parse_double(field(4));
    const auto cores = csv::parse_int(field(5));
    if (!year || *year < -100000 || *year > 100000) {
      reject(it->number, "year must be an integer, got '" + field(0) + "'");
      continue;
    }
    if (!rank || *rank < 1 || *rank > 1000000) {
      reject(it->number, "rank must be a positive integer, got '" + field(1) + "'");
      continue;
    }
    if (!rmax || !(*rmax > 0.0)) {
      reject(it->number, "rmax_tflops must be a positive number, got '" + field(3) + "'");
      continue;
    }
    if (!rpeak || !(*rpeak > 0.0)) {
      reject(it->number, "rpeak_tflops must be a positive number, got '" + field(4) + "'");
      continue;
    }
    if (!cores || *cores < 2) {
      reject(it->number, "cores must be an integer >= 2, got '" + field(5) + "'");
      continue;
    }
    const auto key = std::make_pair(static_cast<int>(*year), static_cast<int>(*rank));
    if (const auto prev = seen.find(key); prev != seen.end()) {
      reject(it->number, "duplicate (year, rank) = (" + std::to_string(key.first) + ", " +
                             std::to_string(key.second) + "), first on line " +
                             std::to_string(prev->second));
      continue;
    }
    seen.emplace(key, it->number);

    RankingRecord rec{key.first, key.second, field(2), *rmax, *rpeak, *cores, false};
    if (rec.rmax_tflops > rec.rpeak_tflops) {
      rec.flagged = true;
      report.warnings.push_back(
          {it->number, "rmax_tflops > rpeak_tflops; record kept but excluded from alpha"});
    }
    dataset.records.push_back(std::move(rec));
    ++report.accepted;
  }

  if (dataset.records.empty()) {
    throw NoAcceptedRowsError("ranking CSV has no valid data rows", std::move(report));
  }
  std::sort(dataset.records.begin(), dataset.records.end(),
            [](const RankingRecord& a, const RankingRecord& b) {
              return std::tie(a.year, a.rank) < std::tie(b.year, b.rank);
            });
  return {std::move(dataset), std::move(report)};
}

inline std::string write_ranking_csv(const RankingDataset& dataset) {
  std::string out = "year,rank,name,rmax_tflops,rpeak_tflops,cores\n";
  for (const auto& r : dataset.records) {
    out += std::to_string(r.year) + ',' + std::to_string(r.rank) + ',' + csv::quote(r.name) +
           ',' + csv::format_exact(r.rmax_tflops) + ',' + csv::format_exact(r.rpeak_tflops) +
           ',' + std::to_string(r.cores) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ranking -> alpha

struct AlphaRecord {
  int year = 0;
  int rank = 0;
  std::string name;
  AlphaEstimate estimate;
};

struct AlphaTable {
  std::vector<AlphaRecord> rows;
  /// Flagged records that were not converted.
  std::size_t skipped = 0;
};

/// alpha_from_efficiency(cores, Rmax/Rpeak) for every unflagged record.
inline AlphaTable dataset_to_alpha(const RankingDataset& dataset) {
  AlphaTable table;
  table.rows.reserve(dataset.records.size());
  for (const auto& r : dataset.records) {
    if (r.flagged) {
      ++table.skipped;
      continue;
    }
    table.rows.push_back({r.year, r.rank, r.name,
                          alpha_from_efficiency(ProcessorCount{r.cores}, Efficiency{r.efficiency()})});
  }
  return table;
}

}  // namespace alphaeff
