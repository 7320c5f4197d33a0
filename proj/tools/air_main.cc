// Copyright 2026 The AIR Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line entry point: run, suite, report, diversity.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "air/errors.h"
#include "air/harness/config.h"
#include "air/harness/diversity.h"
#include "air/harness/runner.h"
#include "air/harness/suite.h"

namespace fs = std::filesystem;
using namespace air;

namespace {

void PrintSummary(const harness::RunSummary& s) {
  std::cout << s.env << ' ' << s.mode << " seed=" << s.seed << ' ' << s.status
            << " final=" << s.final_score << " auc=" << s.auc
            << " reuse_ratio%=" << s.reuse_ratio_pct << " reuse_acc%=";
  if (s.reuse_accuracy_pct)
    std::cout << *s.reuse_accuracy_pct;
  else
    std::cout << "-";
  std::cout << " collected=" << s.total_collected << '\n';
}

void WriteOrPrint(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  if (fs::path(out).has_parent_path()) fs::create_directories(fs::path(out).parent_path());
  std::ofstream(out) << text;
  std::cout << "wrote " << out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budgeted action advising with advice imitation and reuse"};
  app.require_subcommand(1);

  std::string config_path, mode_name, out_dir;
  std::uint64_t seed = 0;
  auto* run = app.add_subcommand("run", "Run one training session per seed");
  run->add_option("--config", config_path, "Run configuration (JSON)")->required();
  auto* seed_opt = run->add_option("--seed", seed, "Override the seed list with one seed");
  run->add_option("--mode", mode_name, "Override the student mode");
  run->add_option("--out", out_dir, "Output directory");

  std::string suite_config;
  int suite_seeds = 3;
  std::vector<std::string> suite_modes;
  std::string suite_out;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* suite = app.add_subcommand("suite", "Run a modes x seeds grid and aggregate it");
  suite->add_option("--config", suite_config, "Base configuration (JSON)")->required();
  suite->add_option("--seeds", suite_seeds, "Number of seeds (1..N)")->required();
  suite->add_option("--modes", suite_modes, "Student modes (default: all seven)");
  suite->add_option("--out", suite_out, "Output root");
  suite->add_option("--jobs", jobs, "Concurrent runs");

  std::vector<std::string> report_in;
  std::string report_out;
  auto* report = app.add_subcommand("report", "Aggregate finished runs");
  report->add_option("--in", report_in, "Run or suite directories")->required();
  report->add_option("--out", report_out, "Report file (default: stdout)");

  std::vector<std::string> div_in;
  std::string div_out;
  auto* diversity = app.add_subcommand("diversity", "Compare advice buffers of runs");
  diversity->add_option("--in", div_in, "Run directories")->required();
  diversity->add_option("--out", div_out, "Report file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      harness::RunConfig config = harness::LoadRunConfig(config_path);
      if (!mode_name.empty()) {
        auto mode = advising::ParseMode(mode_name);
        if (!mode) throw ConfigError("mode", "unknown student mode '" + mode_name + "'");
        config.advising.mode = *mode;
      }
      if (*seed_opt) config.seeds = {seed};
      const fs::path root = out_dir.empty() ? fs::path(config.output_dir) : fs::path(out_dir);
      bool all_ok = true;
      for (std::uint64_t s : config.seeds) {
        const fs::path dir =
            config.seeds.size() == 1 ? root : root / ("seed" + std::to_string(s));
        const harness::RunSummary summary = harness::Run(config, s, dir);
        PrintSummary(summary);
        all_ok = all_ok && summary.ok();
      }
      return all_ok ? 0 : 3;
    }
    if (suite->parsed()) {
      harness::RunConfig base = harness::LoadRunConfig(suite_config);
      std::vector<advising::StudentMode> modes;
      for (const auto& name : suite_modes) {
        auto mode = advising::ParseMode(name);
        if (!mode) throw ConfigError("modes", "unknown student mode '" + name + "'");
        modes.push_back(*mode);
      }
      if (modes.empty()) modes.assign(advising::kAllModes.begin(), advising::kAllModes.end());
      std::vector<std::uint64_t> seeds;
      for (int i = 1; i <= suite_seeds; ++i) seeds.push_back(static_cast<std::uint64_t>(i));
      const fs::path root = suite_out.empty() ? fs::path(base.output_dir) : fs::path(suite_out);
      const auto results =
          harness::RunSuite(harness::ExpandSuite(base, modes, seeds, root), jobs);
      for (const auto& r : results) PrintSummary(r);
      harness::WriteSuiteReport(root / "suite_summary.csv", harness::Aggregate(results));
      std::cout << "wrote " << (root / "suite_summary.csv").string() << '\n';
      return 0;
    }
    if (report->parsed()) {
      std::vector<fs::path> dirs(report_in.begin(), report_in.end());
      const auto runs = harness::CollectSummaries(dirs);
      if (runs.empty()) {
        std::cerr << "no summary.json found under the given directories\n";
        return 2;
      }
      WriteOrPrint(harness::FormatSuiteReport(harness::Aggregate(runs)), report_out);
      return 0;
    }
    if (diversity->parsed()) {
      std::vector<fs::path> dirs(div_in.begin(), div_in.end());
      WriteOrPrint(harness::FormatDiversityReport(harness::DiversityFromRunDirs(dirs)),
                   div_out);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
