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

#include "air/advising/orchestrator.h"

#include "air/errors.h"

namespace air::advising {

AdvisingOrchestrator::AdvisingOrchestrator(AdvisingConfig config,
                                           teacher::AdviceChannel& channel,
                                           int observation_dim,
                                           int action_count,
                                           std::uint64_t seed)
    : config_(std::move(config)),
      caps_(CapabilitiesOf(config_.mode)),
      channel_(channel),
      model_(observation_dim, action_count, config_.imitation,
             DeriveSeed(seed, "imitation")),
      schedule_rng_(DeriveSeed(seed, "reuse-schedule")),
      coin_rng_(DeriveSeed(seed, "advice-coin")) {
  config_.schedule.Validate();
  config_.trigger.Validate();
  AIR_CHECK(config_.fixed_reuse_probability >= 0.0 &&
                config_.fixed_reuse_probability <= 1.0,
            "fixed_reuse_probability must lie in [0, 1]");
  AIR_CHECK(config_.manual_tau >= 0.0, "manual_tau must be non-negative");
}

double AdvisingOrchestrator::CurrentRho(std::int64_t t) const {
  if (!caps_.reuses_advice) return 0.0;
  return caps_.extended_reuse ? config_.schedule.Rho(t)
                              : config_.fixed_reuse_probability;
}

const EpisodeAdviceState& AdvisingOrchestrator::BeginEpisode(std::int64_t t) {
  episode_ = EpisodeAdviceState{};
  if (caps_.reuses_advice)
    episode_.reuse_enabled = UniformUnit(schedule_rng_) < CurrentRho(t);
  return episode_;
}

bool AdvisingOrchestrator::KeepsBuffer() const {
  return caps_.reuses_advice || config_.record_advice;
}

double AdvisingOrchestrator::StepUncertainty(const envs::Observation& state) {
  if (!step_uncertainty_) step_uncertainty_ = model_.Uncertainty(state);
  return *step_uncertainty_;
}

bool AdvisingOrchestrator::CollectionGateOpen(const envs::Observation& state) {
  if (caps_.random_collection)
    return UniformUnit(coin_rng_) < config_.random_advice_probability;
  if (caps_.uncertainty_gated_collection) {
    if (config_.collect_requires_reuse_enabled && !episode_.reuse_enabled)
      return false;
    return !model_.trained() || StepUncertainty(state) > *model_.tau();
  }
  if (caps_.extended_reuse && config_.extended_collect_requires_reuse_enabled)
    return episode_.reuse_enabled;
  return true;
}

void AdvisingOrchestrator::MaybeTrain(std::int64_t t) {
  if (!caps_.reuses_advice || buffer_.empty()) return;
  if (caps_.uncertainty_gated_collection) {
    if (!imitation::ShouldTrain(buffer_, config_.trigger, t)) return;
    const std::int64_t iterations =
        model_.trained() ? config_.trigger.k_periodic : config_.trigger.k_init;
    model_.Train(buffer_, iterations, config_.trigger.batch_size, t);
    model_.TuneThreshold(buffer_);
    step_uncertainty_.reset();
    return;
  }
  // Single imitation event once early advising is over.
  if (model_.trained()) return;
  if (channel_.remaining() > 0 && t < config_.single_imitation_fallback_step)
    return;
  model_.Train(buffer_, config_.trigger.k_init, config_.trigger.batch_size, t);
  if (caps_.auto_threshold)
    model_.TuneThreshold(buffer_);
  else
    model_.SetThreshold(config_.manual_tau);
  step_uncertainty_.reset();
}

bool AdvisingOrchestrator::ReuseWindowOpen(std::int64_t t) const {
  return caps_.extended_reuse || t <= config_.reuse_window_end;
}

Decision AdvisingOrchestrator::ChooseAction(const envs::Observation& state,
                                            student::DqnAgent& student,
                                            std::int64_t t) {
  step_uncertainty_.reset();
  Decision decision;
  bool chosen = false;

  // Collection.
  if (caps_.collects_advice && channel_.remaining() > 0 &&
      CollectionGateOpen(state)) {
    decision.action = channel_.Advise(state);
    decision.source = ActionSource::kCollectedAdvice;
    chosen = true;
    if (KeepsBuffer()) buffer_.Add(state, decision.action);
    ++episode_.collected;
    ++total_collected_;
  }

  // Imitation.
  MaybeTrain(t);

  // Reuse.
  if (!chosen && caps_.reuses_advice && episode_.reuse_enabled &&
      model_.trained() && ReuseWindowOpen(t) &&
      StepUncertainty(state) < *model_.tau()) {
    decision.action = model_.GreedyAction(state);
    decision.source = ActionSource::kReusedAdvice;
    chosen = true;
    ++episode_.reused;
    ++total_reused_;
  }

  decision.uncertainty = step_uncertainty_;
  if (!chosen) {
    decision.action = student.SelfAction(state, /*explore=*/true);
    decision.source = ActionSource::kSelfPolicy;
  }
  return decision;
}

}  // namespace air::advising
