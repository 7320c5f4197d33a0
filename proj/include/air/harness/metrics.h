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

#ifndef AIR_HARNESS_METRICS_H_
#define AIR_HARNESS_METRICS_H_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace air::harness {

enum class RecordKind { kEval, kWindow };

// One row of metrics.csv. Column set (header line included in the file):
//
//   kind,step,eval_score,reuse_count_window,collection_count_window,
//   tau_current,budget_remaining,reuse_accuracy_running
//
// kind is "eval" (one per eval period; counts cover that period) or
// "window" (one per diagnostic window; counts cover that window).
// Empty fields mean "not applicable": eval_score on window rows, tau before
// the first imitation (and always for modes without one), accuracy before
// the first reuse.
struct MetricsRecord {
  RecordKind kind = RecordKind::kWindow;
  std::int64_t step = 0;
  std::optional<double> eval_score;
  std::int64_t reuse_count_window = 0;
  std::int64_t collection_count_window = 0;
  std::optional<double> tau_current;
  std::int64_t budget_remaining = 0;
  std::optional<double> reuse_accuracy_running;
};

inline constexpr const char* kMetricsHeader =
    "kind,step,eval_score,reuse_count_window,collection_count_window,"
    "tau_current,budget_remaining,reuse_accuracy_running";

std::string FormatRecord(const MetricsRecord& record);
// Returns nullopt for lines that are not a complete record (e.g. the tail
// of a killed run).
std::optional<MetricsRecord> ParseRecord(const std::string& line);

// Shortest round-trip decimal representation.
std::string FormatDouble(double value);

// Append-only writer; every row is flushed as soon as it is written.
class MetricsWriter {
 public:
  explicit MetricsWriter(const std::filesystem::path& path);
  void Append(const MetricsRecord& record);

 private:
  std::ofstream out_;
};

std::vector<MetricsRecord> ReadMetrics(const std::filesystem::path& path);

}  // namespace air::harness

#endif  // AIR_HARNESS_METRICS_H_
