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

// alphaeff: effective parallelization (alpha_eff) from scaling measurements
// and ranking lists.
//
//   alphaeff alpha   --k 2 --speedup 1.95
//   alphaeff series  scaling.csv --method all
//   alphaeff ranking top500.csv --timeline --trend --forecast 2026
//   alphaeff synth   --alpha 0.99 --ks 2,4,8 --seed 1
//
// Exit codes: 0 success, 1 data or domain error, 2 usage error.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "alphaeff/error.hpp"
#include "commands.hpp"

namespace cli = alphaeff::cli;

int main(int argc, char** argv) {
  CLI::App app{"Effective parallelization (alpha_eff) of parallel runs and ranked supercomputers"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::GlobalOptions global;
  std::string out_dir;
  app.add_option("--out", out_dir, "Write artifacts into DIR (created if absent)");
  app.add_option("--format", global.format, "Artifact format; svg also writes the CSV data")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cli::Format>{{"csv", cli::Format::Csv}, {"svg", cli::Format::Svg}},
          CLI::ignore_case));
  app.add_flag("--force", global.force, "Overwrite existing files in --out");

  cli::AlphaOptions alpha;
  auto* alpha_cmd = app.add_subcommand("alpha", "alpha_eff of one measurement");
  alpha_cmd->add_option("--k", alpha.k, "Number of processors (>= 2)")->required();
  auto* s_opt = alpha_cmd->add_option("--speedup", alpha.speedup, "Measured speedup S");
  auto* r_opt = alpha_cmd->add_option("--efficiency", alpha.efficiency, "Measured efficiency R = S/k");
  s_opt->excludes(r_opt);

  cli::SeriesOptions series;
  auto* series_cmd = app.add_subcommand("series", "Compare estimators over a scaling series");
  series_cmd->add_option("input", series.input, "Scaling CSV (k,speedup or k,efficiency); - for stdin")
      ->required();
  series_cmd->add_option("--method", series.method,
                         "pairwise, slope, one-minus-eff, closed-form or all")
      ->capture_default_str();

  cli::RankingOptions ranking;
  auto* ranking_cmd = app.add_subcommand("ranking", "Analyze a ranking list");
  ranking_cmd->add_option("input", ranking.input, "Ranking CSV");
  ranking_cmd->add_option("--url", ranking.url, "Fetch the ranking CSV (cached on disk)");
  ranking_cmd->add_flag("--hillside", ranking.hillside, "Year x rank surface");
  ranking_cmd->add_flag("--timeline", ranking.timeline, "Top-N and best-of-year series");
  ranking_cmd->add_flag("--trend", ranking.trend, "Log-linear trend fit");
  ranking_cmd->add_option("--forecast", ranking.forecast_year, "Predict 1 - alpha for YEAR");
  ranking_cmd->add_option("--max-rank", ranking.max_rank, "Ranks kept in the hillside")
      ->capture_default_str();
  ranking_cmd->add_option("--top", ranking.top, "Number of per-rank timelines")->capture_default_str();
  ranking_cmd->add_option("--trend-source", ranking.trend_source, "best or rank1")
      ->capture_default_str();
  ranking_cmd->add_flag("--refresh", ranking.refresh, "Ignore the cache for --url");

  cli::SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate data with a known alpha");
  synth_cmd->add_option("--kind", synth.kind, "series or ranking")->capture_default_str();
  synth_cmd->add_option("--alpha", synth.alpha, "True parallel fraction (series)");
  synth_cmd->add_option("--ks", synth.ks, "Processor counts, comma separated (series)")->delimiter(',');
  synth_cmd->add_option("--noise", synth.noise, "Relative uniform noise on S")->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
  synth_cmd->add_option("--years", synth.years, "Years, as A:B or a comma list (ranking)")
      ->capture_default_str();
  synth_cmd->add_option("--year-from", synth.year_from, "Trend anchor year")->capture_default_str();
  synth_cmd->add_option("--oma-from", synth.oma_from, "1 - alpha at --year-from")->capture_default_str();
  synth_cmd->add_option("--year-to", synth.year_to, "Second anchor year")->capture_default_str();
  synth_cmd->add_option("--oma-to", synth.oma_to, "1 - alpha at --year-to")->capture_default_str();
  synth_cmd->add_option("--ranks", synth.ranks, "Machines per year")->capture_default_str();
  synth_cmd->add_option("--rank-factor", synth.rank_factor, "1 - alpha ratio between ranks")
      ->capture_default_str();
  synth_cmd->add_option("--cores", synth.cores, "Cores per machine")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsageError;
  }
  if (!out_dir.empty()) global.out_dir = out_dir;
  ranking.cache_dir = cli::default_cache_dir();

  try {
    if (*alpha_cmd) cli::cmd_alpha(global, alpha, std::cout, std::cerr);
    if (*series_cmd) cli::cmd_series(global, series, std::cout, std::cerr);
    if (*ranking_cmd) cli::cmd_ranking(global, ranking, std::cout, std::cerr);
    if (*synth_cmd) cli::cmd_synth(global, synth, std::cout, std::cerr);
  } catch (const cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return cli::kUsageError;
  } catch (const alphaeff::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kDataError;
  }
  std::cout.flush();
  return std::cout ? cli::kOk : cli::kDataError;
}
