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

#include "air/student/dqn_agent.h"

#include "air/errors.h"
#include "air/nn/losses.h"

namespace air::student {
namespace {

nn::NetworkSpec QSpec(int observation_dim, int action_count,
                      const DqnConfig& config) {
  nn::NetworkSpec spec;
  spec.input_dim = observation_dim;
  spec.hidden_layers = config.hidden_layers;
  spec.output_dim = action_count;
  spec.dropout_rate = 0.0;
  spec.head_kind = nn::HeadKind::kQDueling;
  return spec;
}

}  // namespace

DqnAgent::DqnAgent(int observation_dim, int action_count, DqnConfig config,
                   std::uint64_t seed)
    : config_(std::move(config)),
      action_count_(action_count),
      online_(QSpec(observation_dim, action_count, config_),
              DeriveSeed(seed, "online")),
      target_(online_),
      optimizer_(online_.num_parameters(),
                 nn::AdamConfig{config_.learning_rate, 0.9, 0.999,
                                config_.adam_epsilon}),
      replay_(config_.replay_capacity, config_.replay_min_size),
      explore_rng_(DeriveSeed(seed, "explore")),
      sample_rng_(DeriveSeed(seed, "replay")) {
  AIR_CHECK(config_.gamma >= 0.0 && config_.gamma < 1.0, "gamma must lie in [0, 1)");
  AIR_CHECK(config_.batch_size > 0, "batch_size must be positive");
  AIR_CHECK(config_.target_update_period > 0, "target_update_period must be positive");
  AIR_CHECK(config_.train_period > 0, "train_period must be positive");
  AIR_CHECK(config_.epsilon.decay_steps > 0, "epsilon decay_steps must be positive");
}

int DqnAgent::GreedyAction(const envs::Observation& state) const {
  return nn::ArgMaxLowestIndex(online_.Evaluate(state));
}

int DqnAgent::SelfAction(const envs::Observation& state, bool explore) {
  if (explore && UniformUnit(explore_rng_) < epsilon())
    return UniformInt(explore_rng_, action_count_);
  return GreedyAction(state);
}

UpdateDiagnostics DqnAgent::ObserveAndUpdate(envs::Transition transition) {
  replay_.Add(std::move(transition));
  ++step_count_;
  UpdateDiagnostics diag;
  if (step_count_ % config_.train_period == 0 && replay_.CanSample()) {
    const nn::TdBatch batch = replay_.Sample(config_.batch_size, sample_rng_);
    nn::LossAndGrad lg = nn::TdLossAndGrad(online_, target_, batch, config_.gamma);
    optimizer_.Apply(online_.mutable_parameters(), lg.gradients);
    diag.trained = true;
    diag.td_loss = lg.loss;
  }
  if (step_count_ % config_.target_update_period == 0) {
    SyncTarget();
    diag.target_synced = true;
  }
  return diag;
}

}  // namespace air::student
