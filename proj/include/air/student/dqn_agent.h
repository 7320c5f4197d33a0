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

#ifndef AIR_STUDENT_DQN_AGENT_H_
#define AIR_STUDENT_DQN_AGENT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "air/envs/environment.h"
#include "air/nn/network.h"
#include "air/nn/optimizer.h"
#include "air/random.h"
#include "air/student/epsilon_schedule.h"
#include "air/student/replay_buffer.h"

namespace air::student {

struct DqnConfig {
  std::vector<int> hidden_layers = {64};
  double gamma = 0.99;
  double learning_rate = 625e-7;
  double adam_epsilon = 1.5e-4;
  int batch_size = 32;
  std::size_t replay_min_size = 50000;
  std::size_t replay_capacity = 500000;
  std::int64_t target_update_period = 7500;
  std::int64_t train_period = 1;
  EpsilonSchedule epsilon;
};

struct UpdateDiagnostics {
  bool trained = false;
  double td_loss = 0.0;
  bool target_synced = false;
};

// Double DQN with a dueling head, uniform replay and a periodically synced
// target network. The agent only chooses actions for itself; anything else
// that ends up executed arrives through ObserveAndUpdate().
class DqnAgent {
 public:
  DqnAgent(int observation_dim, int action_count, DqnConfig config,
           std::uint64_t seed);

  // epsilon-greedy when `explore`, otherwise greedy (lowest index on ties).
  int SelfAction(const envs::Observation& state, bool explore);
  int GreedyAction(const envs::Observation& state) const;
  double epsilon() const { return config_.epsilon(step_count_); }

  UpdateDiagnostics ObserveAndUpdate(envs::Transition transition);

  const nn::Network& online_net() const { return online_; }
  const nn::Network& target_net() const { return target_; }
  nn::Network& mutable_online_net() { return online_; }
  nn::Network& mutable_target_net() { return target_; }
  const ReplayBuffer& replay() const { return replay_; }
  const DqnConfig& config() const { return config_; }
  std::int64_t step_count() const { return step_count_; }
  std::int64_t gradient_steps() const { return optimizer_.step_count(); }
  void SyncTarget() { target_.CopyParametersFrom(online_); }

 private:
  DqnConfig config_;
  int action_count_;
  nn::Network online_;
  nn::Network target_;
  nn::AdamOptimizer optimizer_;
  ReplayBuffer replay_;
  Rng explore_rng_;
  Rng sample_rng_;
  std::int64_t step_count_ = 0;
};

}  // namespace air::student

#endif  // AIR_STUDENT_DQN_AGENT_H_
