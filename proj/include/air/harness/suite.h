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

#ifndef AIR_HARNESS_SUITE_H_
#define AIR_HARNESS_SUITE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "air/harness/config.h"
#include "air/harness/runner.h"

namespace air::harness {

struct SuiteEntry {
  RunConfig config;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
};

// Expands a base config into one entry per (mode, seed) under
// <root>/<env>/<mode>/seed<k>.
std::vector<SuiteEntry> ExpandSuite(const RunConfig& base,
                                    const std::vector<advising::StudentMode>& modes,
                                    const std::vector<std::uint64_t>& seeds,
                                    const std::filesystem::path& root);

// Runs entries on up to `parallelism` threads. Runs share no state; a run
// that throws is reported with status "failed: ..." and does not stop the
// others. Results are in entry order.
std::vector<RunSummary> RunSuite(const std::vector<SuiteEntry>& entries,
                                 int parallelism);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
  int count = 0;
};

MeanStd ComputeMeanStd(const std::vector<double>& values);

// One row per (env, mode): Table II columns plus learning-curve AUC.
struct AggregateRow {
  std::string env;
  std::string mode;
  int runs = 0;
  int failures = 0;
  MeanStd final_score;
  MeanStd reuse_ratio_pct;
  MeanStd reuse_accuracy_pct;  // over runs that reused at least once
  MeanStd auc;
};

std::vector<AggregateRow> Aggregate(const std::vector<RunSummary>& runs);

// Flat CSV table, one line per AggregateRow.
void WriteSuiteReport(const std::filesystem::path& path,
                      const std::vector<AggregateRow>& rows);
std::string FormatSuiteReport(const std::vector<AggregateRow>& rows);

// Finds every summary.json below the given directories.
std::vector<RunSummary> CollectSummaries(
    const std::vector<std::filesystem::path>& dirs);

}  // namespace air::harness

#endif  // AIR_HARNESS_SUITE_H_
