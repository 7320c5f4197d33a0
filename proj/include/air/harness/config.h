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

#ifndef AIR_HARNESS_CONFIG_H_
#define AIR_HARNESS_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "air/advising/orchestrator.h"
#include "air/envs/registry.h"
#include "air/student/dqn_agent.h"

namespace air::harness {

// Full-scale session length; `scale` in a config is relative to it.
inline constexpr std::int64_t kFullScaleTotalSteps = 5000000;
inline constexpr double kDeskScale = 0.04;  // 200k steps

struct TeacherConfig {
  std::string kind = "scripted_oracle";  // or "dqn_snapshot"
  double noise = 0.0;
  std::uint64_t noise_seed = 0;
  std::string checkpoint;
};

struct RunConfig {
  double scale = kDeskScale;
  envs::EnvConfig env;
  std::vector<std::uint64_t> seeds = {1};
  std::int64_t budget = 0;
  std::int64_t total_steps = 0;
  std::int64_t eval_period = 0;
  int eval_episodes = 10;
  std::int64_t diagnostic_window = 100;
  student::DqnConfig dqn;
  advising::AdvisingConfig advising;
  TeacherConfig teacher;
  bool instrumentation = true;
  bool record_actions = false;
  bool save_checkpoints = false;
  std::string output_dir = "runs";
};

// Every count-like hyperparameter is its full-scale value times `scale`, so the
// proportions (budget 0.5% of steps, epsilon decay 10%, reuse decay window
// 10%..40%, ...) carry over to any session length.
RunConfig DefaultRunConfig(double scale = kDeskScale);

// Strict parse: unknown keys and wrongly typed values raise ConfigError
// naming the offending key. Unset keys keep the scaled defaults.
RunConfig ParseRunConfig(const nlohmann::json& doc);
RunConfig LoadRunConfig(const std::filesystem::path& path);
nlohmann::json ToJson(const RunConfig& config);

void ValidateRunConfig(const RunConfig& config);

}  // namespace air::harness

#endif  // AIR_HARNESS_CONFIG_H_
