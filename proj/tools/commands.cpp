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

#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <utility>

#include "alphaeff/alphaeff.hpp"
#include "alphaeff/fetch.hpp"

namespace alphaeff::cli {
namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void report_warnings(const IngestReport& report, std::ostream& err) {
  for (const auto& w : report.warnings) {
    err << "warning: line " << w.line << ": " << w.reason << '\n';
  }
}

// Routes named artifacts to files in the output directory, or to `out`
// separated by blank lines when no directory was given.
class Sink {
 public:
  Sink(const GlobalOptions& g, std::ostream& out) : g_(g), out_(out) {
    if (g_.format == Format::Svg && !g_.out_dir) {
      throw UsageError("--format svg needs --out DIR (the CSV data is written alongside)");
    }
    if (g_.out_dir) {
      std::error_code ec;
      std::filesystem::create_directories(*g_.out_dir, ec);
      if (ec) throw Error("cannot create output directory " + g_.out_dir->string() + ": " + ec.message());
    }
  }

  bool svg() const { return g_.format == Format::Svg; }

  void emit(const std::string& filename, const std::string& content) {
    if (!g_.out_dir) {
      if (written_++ > 0) out_ << '\n';
      out_ << content;
      return;
    }
    const auto path = *g_.out_dir / filename;
    if (std::filesystem::exists(path) && !g_.force) {
      throw UsageError("refusing to overwrite " + path.string() + " (use --force)");
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
    if (!f) throw Error("failed writing " + path.string());
    ++written_;
  }

 private:
  const GlobalOptions& g_;
  std::ostream& out_;
  int written_ = 0;
};

std::string estimate_row(const AlphaEstimate& e) {
  return csv::format_sci(e.alpha) + ',' + csv::format_sci(e.one_minus_alpha) + ',' +
         std::string(to_string(e.method)) + ',' + (e.in_model ? "true" : "false");
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* v = std::getenv("ALPHAEFF_CACHE_DIR"); v && *v) return v;
  if (const char* v = std::getenv("XDG_CACHE_HOME"); v && *v) return std::filesystem::path(v) / "alphaeff";
  if (const char* v = std::getenv("HOME"); v && *v) return std::filesystem::path(v) / ".cache" / "alphaeff";
  return ".alphaeff-cache";
}

// ---------------------------------------------------------------------------

void cmd_alpha(const GlobalOptions&, const AlphaOptions& o, std::ostream& out, std::ostream& err) {
  if (o.speedup.has_value() == o.efficiency.has_value()) {
    throw UsageError("give exactly one of --speedup or --efficiency");
  }
  if (o.k < 2) throw UsageError("--k must be >= 2 (alpha_eff is undefined for one processor)");

  const ProcessorCount k{o.k};
  const auto e = o.speedup ? alpha_eff_from_speedup(k, Speedup{*o.speedup})
                           : alpha_from_efficiency(k, Efficiency{*o.efficiency});
  out << "alpha,one_minus_alpha,method,in_model\n" << estimate_row(e) << '\n';
  if (!e.in_model) {
    err << "warning: alpha = " << csv::format_sci(e.alpha)
        << " is outside [0, 1]; the measurement does not fit Amdahl's model\n";
  }
}

// ---------------------------------------------------------------------------

void cmd_series(const GlobalOptions& g, const SeriesOptions& o, std::ostream& out,
                std::ostream& err) {
  static const std::vector<std::string> kMethods = {"one-minus-eff", "pairwise", "slope",
                                                    "closed-form"};
  if (o.method != "all" &&
      std::find(kMethods.begin(), kMethods.end(), o.method) == kMethods.end()) {
    throw UsageError("unknown --method '" + o.method +
                     "'; expected pairwise, slope, one-minus-eff, closed-form or all");
  }
  Sink sink(g, out);
  const auto label = o.input == "-" ? std::string("stdin")
                                    : std::filesystem::path(o.input).stem().string();
  ParsedSeries parsed = [&] {
    try {
      return parse_scaling_csv(read_input(o.input), std::nullopt, label);
    } catch (const NoAcceptedRowsError& e) {
      report_warnings(e.report(), err);
      throw;
    }
  }();
  report_warnings(parsed.report, err);
  const auto& series = parsed.series;

  const auto wanted = [&](const std::string& m) { return o.method == "all" || o.method == m; };
  std::vector<svg::Series> curves;
  std::string table = "k,method,value\n";
  const auto add = [&](const std::string& method, const std::vector<std::pair<std::int64_t, double>>& rows) {
    svg::Series curve{method, {}};
    for (const auto& [k, v] : rows) {
      table += std::to_string(k) + ',' + method + ',' + csv::format_sci(v) + '\n';
      curve.points.emplace_back(static_cast<double>(k), v);
    }
    curves.push_back(std::move(curve));
  };

  if (wanted("one-minus-eff")) {
    std::vector<std::pair<std::int64_t, double>> rows;
    for (const auto& p : one_minus_efficiency(series)) rows.emplace_back(p.k.value(), p.value);
    add("one-minus-eff", rows);
  }
  if (wanted("pairwise")) {
    std::vector<std::pair<std::int64_t, double>> rows;
    for (const auto& p : pairwise_alpha(series)) {
      rows.emplace_back(p.k_high.value(), p.estimate.one_minus_alpha);
    }
    add("pairwise", rows);
  }
  if (wanted("slope")) {
    const auto fit = slope_alpha(series);
    std::vector<std::pair<std::int64_t, double>> rows;
    for (const auto& p : series.points()) rows.emplace_back(p.k.value(), fit.estimate.one_minus_alpha);
    add("slope", rows);
    err << "slope fit: one_minus_alpha=" << csv::format_sci(fit.estimate.one_minus_alpha)
        << " intercept=" << csv::format_sci(fit.intercept)
        << " r_squared=" << (fit.r_squared ? csv::format_sci(*fit.r_squared) : std::string("nan"))
        << " n=" << fit.n << '\n';
  }
  if (wanted("closed-form")) {
    std::vector<std::pair<std::int64_t, double>> rows;
    for (const auto& [k, e] : closed_form_alpha(series)) rows.emplace_back(k.value(), e.one_minus_alpha);
    add("closed-form", rows);
  }

  sink.emit("series.csv", table);
  if (sink.svg()) {
    sink.emit("series.svg",
              svg::render(svg::LineChart{series.label(),
                                         {"Number of processors", svg::Scale::Log2},
                                         {"1 - alpha_eff", svg::Scale::Log10},
                                         curves}));
  }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<svg::Series> timeline_curves(const std::vector<TimelineSeries>& series) {
  std::vector<svg::Series> curves;
  for (const auto& s : series) {
    svg::Series c{s.label, {}};
    for (const auto& p : s.points) c.points.emplace_back(p.year, p.one_minus_alpha);
    curves.push_back(std::move(c));
  }
  return curves;
}

void require_positive_source(const TimelineSeries& source) {
  if (source.nonpositive.empty()) return;
  const auto& p = source.nonpositive.front();
  throw DomainError("cannot take log10 of 1 - alpha = " + csv::format_sci(p.one_minus_alpha) +
                    " for year " + std::to_string(p.year) + " rank " + std::to_string(p.rank) +
                    " '" + p.name + "' (Rmax equals Rpeak)");
}

}  // namespace

void cmd_ranking(const GlobalOptions& g, const RankingOptions& o, std::ostream& out,
                 std::ostream& err) {
  if (o.input.empty() == o.url.empty()) throw UsageError("give exactly one of FILE or --url");
  if (o.max_rank < 1) throw UsageError("--max-rank must be >= 1");
  if (o.top < 1) throw UsageError("--top must be >= 1");
  if (o.trend_source != "best" && o.trend_source != "rank1") {
    throw UsageError("--trend-source must be 'best' or 'rank1'");
  }
  Sink sink(g, out);

  ParsedRanking parsed = [&] {
    try {
      if (!o.url.empty()) {
        FetchOptions fo;
        fo.force = o.refresh;
        return fetch_ranking(o.url, o.cache_dir, fo);
      }
      return parse_ranking_csv(read_input(o.input), o.input);
    } catch (const NoAcceptedRowsError& e) {
      report_warnings(e.report(), err);
      throw;
    }
  }();
  report_warnings(parsed.report, err);

  const auto table = dataset_to_alpha(parsed.dataset);
  if (table.skipped > 0) err << "note: " << table.skipped << " flagged record(s) skipped\n";
  for (const auto& r : table.rows) {
    if (!r.estimate.in_model) {
      err << "warning: " << r.year << " rank " << r.rank << " '" << r.name
          << "' is outside Amdahl's model (alpha = " << csv::format_sci(r.estimate.alpha) << ")\n";
    }
  }
  if (table.rows.empty()) throw EmptyDataError("no usable ranking records");

  const bool any_artifact = o.hillside || o.timeline || o.trend || o.forecast_year;
  if (!any_artifact) {
    std::string csv_out = "year,rank,name,alpha,one_minus_alpha,in_model\n";
    for (const auto& r : table.rows) {
      csv_out += std::to_string(r.year) + ',' + std::to_string(r.rank) + ',' + csv::quote(r.name) +
                 ',' + csv::format_sci(r.estimate.alpha) + ',' +
                 csv::format_sci(r.estimate.one_minus_alpha) + ',' +
                 (r.estimate.in_model ? "true" : "false") + '\n';
    }
    sink.emit("alphas.csv", csv_out);
    return;
  }

  if (o.hillside) {
    const auto surface = build_hillside(table.rows, o.max_rank);
    if (surface.skipped > 0) {
      err << "note: " << surface.skipped << " hillside cell(s) left empty (out of model or 1 - alpha = 0)\n";
    }
    sink.emit("hillside.csv", write_hillside_csv(surface));
    if (sink.svg()) {
      sink.emit("hillside.svg", svg::render(surface, "Parallelization efficiency by year and rank"));
    }
  }

  std::vector<TimelineSeries> timeline;
  const bool need_timeline = o.timeline || o.trend || o.forecast_year;
  if (need_timeline) {
    timeline = top_n_series(table.rows, std::max(o.top, 1));
    timeline.push_back(best_of_year(table.rows));
    for (int y : timeline.back().omitted_years) {
      err << "warning: no in-model record in " << y << "; omitted from the best-of-year series\n";
    }
  }

  if (o.timeline) {
    sink.emit("timeline.csv", write_timeline_csv(timeline));
    if (sink.svg()) {
      sink.emit("timeline.svg",
                svg::render(svg::LineChart{"Timeline of 1 - alpha",
                                           {"Year", svg::Scale::Linear},
                                           {"1 - alpha", svg::Scale::Log10},
                                           timeline_curves(timeline)}));
    }
  }

  if (o.trend || o.forecast_year) {
    const auto& source = o.trend_source == "best" ? timeline.back() : timeline.front();
    require_positive_source(source);
    const auto model = fit_trend(source);
    if (o.trend) {
      sink.emit("trend.csv", write_trend_csv(model));
      if (sink.svg()) {
        auto curves = timeline_curves({source});
        svg::Series line{"trend", {}};
        for (int y : {model.year_min, model.year_max}) {
          line.points.emplace_back(y, forecast(model, y).one_minus_alpha);
        }
        curves.push_back(std::move(line));
        sink.emit("trend.svg", svg::render(svg::LineChart{"Trend of 1 - alpha",
                                                          {"Year", svg::Scale::Linear},
                                                          {"1 - alpha", svg::Scale::Log10},
                                                          curves}));
      }
    }
    if (o.forecast_year) {
      const auto f = forecast(model, *o.forecast_year);
      sink.emit("forecast.csv", "year,one_minus_alpha,extrapolated\n" +
                                    std::to_string(*o.forecast_year) + ',' +
                                    csv::format_sci(f.one_minus_alpha) + ',' +
                                    (f.extrapolated ? "true" : "false") + '\n');
      if (f.extrapolated) {
        err << "note: " << *o.forecast_year << " lies outside the fitted window " << model.year_min
            << "-" << model.year_max << " (extrapolated)\n";
      }
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> parse_years(const std::string& spec) {
  std::vector<int> years;
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    const auto a = csv::parse_int(spec.substr(0, colon));
    const auto b = csv::parse_int(spec.substr(colon + 1));
    if (!a || !b || *b < *a || *b - *a > 10000) throw UsageError("bad --years range '" + spec + "'");
    for (auto y = *a; y <= *b; ++y) years.push_back(static_cast<int>(y));
    return years;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto y = csv::parse_int(item);
    if (!y) throw UsageError("bad year '" + item + "' in --years");
    years.push_back(static_cast<int>(*y));
  }
  if (years.empty()) throw UsageError("--years is empty");
  return years;
}

}  // namespace

void cmd_synth(const GlobalOptions& g, const SynthOptions& o, std::ostream& out, std::ostream& err) {
  Sink sink(g, out);
  // Ground truth goes wherever the data does not.
  std::ostream& truth = g.out_dir ? out : err;

  if (o.kind == "series") {
    if (!o.alpha) throw UsageError("synth series needs --alpha");
    if (o.ks.empty()) throw UsageError("synth series needs --ks");
    SynthSpec spec{*o.alpha, o.ks, o.noise, o.seed};
    ScalingSeries series = [&] {
      try {
        return generate_series(spec);
      } catch (const ParameterError& e) {
        throw UsageError(e.what());
      }
    }();
    sink.emit("synthetic_series.csv", write_scaling_csv(series));
    truth << "alpha_true,one_minus_alpha_true,noise_rel,seed\n"
          << csv::format_sci(spec.alpha_true) << ',' << csv::format_sci(1.0 - spec.alpha_true) << ','
          << csv::format_sci(spec.noise_rel) << ',' << spec.seed << '\n';
    return;
  }
  if (o.kind == "ranking") {
    RankingSchedule schedule;
    schedule.year_from = o.year_from;
    schedule.oma_from = o.oma_from;
    schedule.year_to = o.year_to;
    schedule.oma_to = o.oma_to;
    schedule.years = parse_years(o.years);
    schedule.ranks = o.ranks;
    schedule.rank_factor = o.rank_factor;
    schedule.cores = o.cores;
    RankingDataset dataset = [&] {
      try {
        return generate_ranking(schedule);
      } catch (const ParameterError& e) {
        throw UsageError(e.what());
      }
    }();
    sink.emit("synthetic_ranking.csv", write_ranking_csv(dataset));
    truth << "slope_decades_per_year,intercept_log10,rank_factor\n"
          << csv::format_sci(schedule.slope()) << ',' << csv::format_sci(schedule.intercept()) << ','
          << csv::format_sci(schedule.rank_factor) << '\n';
    return;
  }
  throw UsageError("--kind must be 'series' or 'ranking'");
}

}  // namespace alphaeff::cli
