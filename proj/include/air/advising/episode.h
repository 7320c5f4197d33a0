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

#ifndef AIR_ADVISING_EPISODE_H_
#define AIR_ADVISING_EPISODE_H_

#include <cstdint>
#include <functional>

#include "air/advising/instrumentation.h"
#include "air/advising/orchestrator.h"
#include "air/envs/environment.h"
#include "air/student/dqn_agent.h"

namespace air::advising {

struct StepRecord {
  std::int64_t t = 0;
  Decision decision;
  const envs::Transition* transition = nullptr;
  student::UpdateDiagnostics update;
  bool reuse_hit = false;
};

using StepHook = std::function<void(const StepRecord&)>;

struct EpisodeSummary {
  double episode_return = 0.0;
  int steps = 0;
  std::int64_t collected = 0;
  std::int64_t reused = 0;
  std::int64_t reuse_hits = 0;
  bool terminal = false;
  bool truncated = false;
};

// Plays one training episode, or until the global step counter `t` reaches
// `t_max`. `t` counts completed steps and is advanced in place.
EpisodeSummary RunEpisode(envs::Environment& env, AdvisingOrchestrator& advisor,
                          student::DqnAgent& student, std::int64_t& t,
                          std::int64_t t_max, Instrumentation* instrumentation,
                          const StepHook& hook = {});

}  // namespace air::advising

#endif  // AIR_ADVISING_EPISODE_H_
