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

#include "air/advising/episode.h"

namespace air::advising {

EpisodeSummary RunEpisode(envs::Environment& env, AdvisingOrchestrator& advisor,
                          student::DqnAgent& student, std::int64_t& t,
                          std::int64_t t_max, Instrumentation* instrumentation,
                          const StepHook& hook) {
  EpisodeSummary summary;
  envs::Observation state = env.Reset();
  advisor.BeginEpisode(t + 1);
  while (t < t_max) {
    ++t;
    StepRecord record;
    record.t = t;
    record.decision = advisor.ChooseAction(state, student, t);
    if (instrumentation != nullptr)
      record.reuse_hit = instrumentation->OnDecision(state, record.decision);

    envs::Transition tr = env.Step(record.decision.action);
    record.update = student.ObserveAndUpdate(tr);
    record.transition = &tr;

    summary.episode_return += tr.reward;
    ++summary.steps;
    switch (record.decision.source) {
      case ActionSource::kCollectedAdvice: ++summary.collected; break;
      case ActionSource::kReusedAdvice: ++summary.reused; break;
      case ActionSource::kSelfPolicy: break;
    }
    if (record.reuse_hit) ++summary.reuse_hits;
    summary.terminal = tr.terminal;
    summary.truncated = tr.truncated;
    if (hook) hook(record);
    if (tr.terminal || tr.truncated) break;
    state = std::move(tr.next_state);
  }
  return summary;
}

}  // namespace air::advising
