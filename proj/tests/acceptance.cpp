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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alphaeff/alphaeff.hpp"
#include "commands.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace alphaeff;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// 1: both closed-form round trips, 10k draws.
Outcome round_trips() {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::int64_t> kdist(2, 100'000'000);
  std::uniform_real_distribution<double> adist(0.0, 1.0);
  double worst = 0;
  int failures = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < 10000; ++i) {
    const ProcessorCount k{kdist(rng)};
    const double a = adist(rng);
    for (double got : {alpha_eff_from_speedup(k, speedup_from_alpha(k, a)).alpha,
                       alpha_from_efficiency(k, efficiency_from_alpha(k, a)).alpha}) {
      const double rel = got == a ? 0.0 : std::abs(got - a) / a;
      worst = std::max(worst, rel);
      if (!(rel <= 1e-12)) ++failures;
    }
  }
  const double dt = seconds_since(t0);
  return {failures == 0 && dt < 1.0, "worst relative error " + fmt(worst) + ", " +
                                         std::to_string(failures) + " failures, " + fmt(dt) + " s"};
}

// 2: speedups from inverting the speedup/alpha relation at the published
// coordinates, pushed through the `alpha` command.
Outcome vintage_machines() {
  struct Coord {
    const char* machine;
    std::int64_t k;
    double oma;
  };
  const std::vector<Coord> coords = {{"Cray Y-MP/8", 2, 0.0256},   {"Cray Y-MP/8", 4, 0.0213},
                                     {"Cray Y-MP/8", 8, 0.0213},   {"IBM-3090", 2, 0.0050},
                                     {"Alliant FX/80", 2, 0.0309}, {"Alliant FX/80", 8, 0.0479}};
  double worst = 0;
  for (const auto& c : coords) {
    const double s = static_cast<double>(oracle::speedup_for_sequential_fraction(c.k, c.oma));
    cli::AlphaOptions o;
    o.k = c.k;
    o.speedup = s;
    std::ostringstream out, err;
    cli::cmd_alpha(cli::GlobalOptions{}, o, out, err);
    // Second line: alpha,one_minus_alpha,method,in_model
    std::istringstream lines(out.str());
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    const auto fields = csv::split_fields(row);
    const auto oma = fields && fields->size() == 4 ? csv::parse_double((*fields)[1]) : std::nullopt;
    if (!oma) return {false, std::string("unparseable output for ") + c.machine + ": " + out.str()};
    worst = std::max(worst, std::abs(*oma - c.oma));
  }
  return {worst <= 1e-6, "6 coordinates, worst absolute error " + fmt(worst)};
}

// 3: Nov-2016 list entry for Sunway TaihuLight.
Outcome sunway() {
  const auto parsed = parse_ranking_csv(slurp(fs::path(ALPHAEFF_TEST_DATA) / "ranking_sunway_2016.csv"));
  const auto table = dataset_to_alpha(parsed.dataset);
  if (table.rows.size() != 1) return {false, "expected one record"};
  const auto best = best_of_year(table.rows);
  if (best.points.size() != 1) return {false, "no timeline point"};
  const double oma = best.points[0].one_minus_alpha;
  const double reference = 33e-9;
  const bool ok = best.points[0].year == 2016 && std::abs(oma - reference) <= 0.15 * reference &&
                  std::abs(oma - 3.27e-8) <= 0.005e-8;
  return {ok, "1 - alpha = " + fmt(oma) + " (reference 3.3e-08)"};
}

// 4: two-point trend through (1993, 1e-3) and (2016, 1e-7).
Outcome trend_endpoints() {
  const std::vector<TimelinePoint> pts = {{1993, 1, "a", 1e-3}, {2016, 1, "b", 1e-7}};
  const auto model = fit_trend(pts);
  const double want = -4.0 / 23.0;
  const bool slope_ok = std::abs(model.slope - want) <= 1e-9;
  const bool r2_ok = model.r_squared && *model.r_squared == 1.0;
  const bool ends_ok =
      forecast(model, 1993).one_minus_alpha == 1e-3 && forecast(model, 2016).one_minus_alpha == 1e-7;
  return {slope_ok && r2_ok && ends_ok,
          "slope " + fmt(model.slope) + ", R^2 " + (model.r_squared ? fmt(*model.r_squared) : "n/a") +
              ", endpoints " + (ends_ok ? "exact" : "inexact")};
}

ScalingSeries noiseless(double alpha) {
  return generate_series(SynthSpec{alpha, {2, 4, 8, 16, 32}, 0.0, 0});
}

// 5: slope, pairwise and point-wise closed form agree on noiseless data.
Outcome estimator_agreement() {
  double worst = 0;
  for (double a : {0.5, 0.9, 0.99, 0.9999}) {
    const auto s = noiseless(a);
    const double slope = slope_alpha(s).estimate.alpha;
    for (const auto& iv : pairwise_alpha(s)) worst = std::max(worst, std::abs(iv.estimate.alpha - slope));
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto pt = alpha_from_efficiency(s.points()[i].k, Efficiency{s.efficiency(i)});
      worst = std::max(worst, std::abs(pt.alpha - slope));
    }
    worst = std::max(worst, std::abs(slope - a));
  }
  return {worst <= 1e-10, "worst absolute disagreement " + fmt(worst)};
}

// 6: 1 - S/k grows with k while the pairwise estimate does not move.
Outcome efficiency_divergence() {
  for (double a : {0.5, 0.9, 0.99, 0.9999}) {
    const auto s = noiseless(a);
    const auto ome = one_minus_efficiency(s);
    for (std::size_t i = 1; i < ome.size(); ++i) {
      if (!(ome[i].value > ome[i - 1].value)) {
        return {false, "1 - S/k not increasing at alpha=" + fmt(a)};
      }
    }
    const auto pw = pairwise_alpha(s);
    for (const auto& iv : pw) {
      // Speedups are rounded to double, so "constant" means equal to a few
      // ulp (the spread at alpha = 0.9 is about 1.4e-16).
      if (std::abs(iv.estimate.one_minus_alpha - pw.front().estimate.one_minus_alpha) > 1e-15) {
        return {false, "pairwise estimate varies at alpha=" + fmt(a)};
      }
    }
  }
  return {true, "4 series, 1 - S/k strictly increasing, pairwise flat"};
}

// 7: mean slope estimate over 100 noisy seeds.
Outcome noise_robustness() {
  const auto t0 = Clock::now();
  double sum = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    sum += slope_alpha(generate_series(SynthSpec{0.99, {2, 4, 8, 16, 32}, 0.01, seed}))
               .estimate.one_minus_alpha;
  }
  const double mean = sum / 100;
  const double dt = seconds_since(t0);
  const double rel = std::abs(mean - 1e-2) / 1e-2;
  return {rel <= 0.10 && dt < 5.0,
          "mean 1 - alpha " + fmt(mean) + " (" + fmt(100 * rel) + "% off), " + fmt(dt) + " s"};
}

int run(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return rc;
}

// Same commands that produced tests/golden.
bool pipeline(const fs::path& dir) {
  const std::string cli = std::string("\"") + ALPHAEFF_CLI + "\" --out \"" + dir.string() + "\" ";
  const std::string quiet = " >/dev/null 2>&1";
  const auto d = [&](const char* f) { return " \"" + (dir / f).string() + "\""; };
  return run(cli + "synth --alpha 0.99 --ks 2,4,8,16,32 --noise 0.01 --seed 42" + quiet) == 0 &&
         run(cli + "series" + d("synthetic_series.csv") + quiet) == 0 &&
         run(cli + "synth --kind ranking --years 1993:2016 --ranks 3 --rank-factor 2 --cores 1000000" +
             quiet) == 0 &&
         run(cli + "ranking" + d("synthetic_ranking.csv") +
             " --hillside --timeline --trend --forecast 2026 --max-rank 3" + quiet) == 0 &&
         run(std::string("\"") + ALPHAEFF_CLI + "\" ranking" + d("synthetic_ranking.csv") + " >" +
             d("alphas.csv") + " 2>/dev/null") == 0;
}

// 8: synth -> series/ranking, twice, byte-compared to each other and to
// the committed golden files.
Outcome determinism() {
  const fs::path golden = ALPHAEFF_GOLDEN_DIR;
  const fs::path root = fs::temp_directory_path() / ("alphaeff-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(root);
  const fs::path a = root / "run1", b = root / "run2";
  if (!pipeline(a) || !pipeline(b)) {
    fs::remove_all(root);
    return {false, "pipeline command failed"};
  }
  std::size_t files = 0;
  std::string mismatch;
  for (const auto& entry : fs::directory_iterator(golden)) {
    const auto name = entry.path().filename();
    const auto want = slurp(entry.path());
    if (slurp(a / name) != slurp(b / name)) mismatch += " " + name.string() + "(runs differ)";
    else if (slurp(a / name) != want) mismatch += " " + name.string() + "(differs from golden)";
    ++files;
  }
  std::size_t produced = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(a)) ++produced;
  fs::remove_all(root);
  if (produced != files) mismatch += " (file count " + std::to_string(produced) + " vs " +
                                     std::to_string(files) + " golden)";
  return {mismatch.empty() && files > 0,
          mismatch.empty() ? std::to_string(files) + " files byte-identical" : "mismatch:" + mismatch};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"round-trip identities (10k draws)", round_trips},
      {"vintage machines through `alpha`", vintage_machines},
      {"Sunway TaihuLight 2016", sunway},
      {"trend endpoints 1993/2016", trend_endpoints},
      {"estimator agreement on noiseless series", estimator_agreement},
      {"1 - S/k diverges, pairwise flat", efficiency_divergence},
      {"noise robustness (100 seeds)", noise_robustness},
      {"end-to-end determinism vs golden files", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    if (!r.ok) ++failed;
    std::cout << (r.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first
              << " -- " << r.detail << '\n';
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
