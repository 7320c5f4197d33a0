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

#ifndef AIR_ADVISING_ORCHESTRATOR_H_
#define AIR_ADVISING_ORCHESTRATOR_H_

#include <cstdint>
#include <optional>

#include "air/advising/reuse_schedule.h"
#include "air/advising/student_mode.h"
#include "air/envs/environment.h"
#include "air/imitation/advice_buffer.h"
#include "air/imitation/imitation_model.h"
#include "air/random.h"
#include "air/student/dqn_agent.h"
#include "air/teacher/teacher.h"

namespace air::advising {

struct AdvisingConfig {
  StudentMode mode = StudentMode::kAIR;
  imitation::ImitationConfig imitation;
  imitation::ImitationTriggerConfig trigger;
  // Extended reuse (AR+A+E, AIR).
  ReuseSchedule schedule;
  // Non-extended reuse (AR, AR+A): fixed enable probability, and reuse only
  // while t <= reuse_window_end (the student's epsilon-decay window).
  double fixed_reuse_probability = 0.5;
  std::int64_t reuse_window_end = 500000;
  // AR's hand-set threshold.
  double manual_tau = 0.01;
  // Single-training modes (AR, AR+A, AR+A+E) train when the budget runs out,
  // or at this step if it never does.
  std::int64_t single_imitation_fallback_step = 2500000;
  double random_advice_probability = 0.5;
  // AIR collects only in reuse-enabled episodes when true.
  bool collect_requires_reuse_enabled = true;
  // Same gate for AR+A+E; off means plain early advising.
  bool extended_collect_requires_reuse_enabled = false;
  // EA/RA keep their would-be advice buffer for offline analysis.
  bool record_advice = false;
};

enum class ActionSource { kCollectedAdvice, kReusedAdvice, kSelfPolicy };

struct Decision {
  int action = 0;
  ActionSource source = ActionSource::kSelfPolicy;
  // Uncertainty consulted by a gate this step, if any.
  std::optional<double> uncertainty;
};

struct EpisodeAdviceState {
  bool reuse_enabled = false;
  std::int64_t collected = 0;
  std::int64_t reused = 0;
};

// The per-step Collection -> Imitation -> Reuse -> self-policy pipeline for
// every student mode. Owns the advice buffer and the imitation model; the
// teacher is reached only through the metered channel.
class AdvisingOrchestrator {
 public:
  AdvisingOrchestrator(AdvisingConfig config, teacher::AdviceChannel& channel,
                       int observation_dim, int action_count,
                       std::uint64_t seed);

  // Draws this episode's reuse_enabled flag. Call once per env reset.
  const EpisodeAdviceState& BeginEpisode(std::int64_t t);

  Decision ChooseAction(const envs::Observation& state,
                        student::DqnAgent& student, std::int64_t t);

  double CurrentRho(std::int64_t t) const;
  const AdvisingConfig& config() const { return config_; }
  const ModeCapabilities& capabilities() const { return caps_; }
  const EpisodeAdviceState& episode() const { return episode_; }
  const imitation::AdviceBuffer& buffer() const { return buffer_; }
  const imitation::ImitationModel& model() const { return model_; }
  imitation::ImitationModel& mutable_model() { return model_; }
  imitation::AdviceBuffer& mutable_buffer() { return buffer_; }
  std::optional<double> tau() const { return model_.tau(); }
  std::int64_t total_collected() const { return total_collected_; }
  std::int64_t total_reused() const { return total_reused_; }
  std::int64_t remaining_budget() const { return channel_.remaining(); }

 private:
  bool CollectionGateOpen(const envs::Observation& state);
  void MaybeTrain(std::int64_t t);
  bool ReuseWindowOpen(std::int64_t t) const;
  double StepUncertainty(const envs::Observation& state);
  bool KeepsBuffer() const;

  AdvisingConfig config_;
  ModeCapabilities caps_;
  teacher::AdviceChannel& channel_;
  imitation::AdviceBuffer buffer_;
  imitation::ImitationModel model_;
  Rng schedule_rng_;
  Rng coin_rng_;
  EpisodeAdviceState episode_;
  std::optional<double> step_uncertainty_;
  std::int64_t total_collected_ = 0;
  std::int64_t total_reused_ = 0;
};

}  // namespace air::advising

#endif  // AIR_ADVISING_ORCHESTRATOR_H_
