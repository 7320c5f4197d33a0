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

#ifndef AIR_HARNESS_RUNNER_H_
#define AIR_HARNESS_RUNNER_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "air/envs/environment.h"
#include "air/harness/config.h"
#include "air/student/dqn_agent.h"
#include "air/teacher/teacher.h"

namespace air::harness {

// Per-component seeds derived from a run's master seed.
struct RunSeeds {
  std::uint64_t env;
  std::uint64_t eval_env;
  std::uint64_t student;
  std::uint64_t advising;

  static RunSeeds From(std::uint64_t master);
};

// Table-II style outcome of one run, persisted as summary.json.
struct RunSummary {
  std::string env;
  std::string mode;
  std::uint64_t seed = 0;
  std::string status = "ok";  // "ok" or "failed: <reason>"
  std::int64_t total_steps = 0;
  std::int64_t eval_records = 0;
  double final_score = 0.0;
  double auc = 0.0;  // mean evaluation score over the learning curve
  double reuse_ratio_pct = 0.0;
  std::optional<double> reuse_accuracy_pct;
  std::int64_t total_collected = 0;
  std::int64_t total_reused = 0;
  std::int64_t reuse_hits = 0;
  std::int64_t metered_queries = 0;
  std::int64_t shadow_queries = 0;
  std::int64_t budget_remaining = 0;
  std::int64_t imitation_events = 0;
  std::optional<double> final_tau;
  std::int64_t advice_buffer_size = 0;

  bool ok() const { return status == "ok"; }
};

nlohmann::json ToJson(const RunSummary& summary);
RunSummary SummaryFromJson(const nlohmann::json& doc);
RunSummary ReadSummary(const std::filesystem::path& path);

std::unique_ptr<teacher::TeacherPolicy> MakeTeacher(const RunConfig& config);

// Mean undiscounted return of the student's greedy policy over `episodes`
// episodes. Takes the agent by const reference: nothing is learned, stored
// or asked during evaluation.
double EvaluateGreedy(const student::DqnAgent& agent, envs::Environment& env,
                      int episodes);

// Runs one seeded training session and writes into `out_dir`:
//   metrics.csv   line-delimited MetricsRecord rows (see metrics.h)
//   summary.json  RunSummary
//   config.json   the resolved configuration
//   advice.csv    the advice buffer, when the mode keeps one
//   actions.txt   executed action per step, when record_actions is set
//   student.ckpt, imitation.ckpt   when save_checkpoints is set
// Training divergence marks the run failed; partial metrics are kept.
RunSummary Run(const RunConfig& config, std::uint64_t seed,
               const std::filesystem::path& out_dir);

}  // namespace air::harness

#endif  // AIR_HARNESS_RUNNER_H_
