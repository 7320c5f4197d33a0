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

#ifndef AIR_ENVS_WRAPPERS_H_
#define AIR_ENVS_WRAPPERS_H_

#include <memory>

#include "air/envs/environment.h"

namespace air::envs {

// Clamps rewards into [-1, 1].
class ClipReward : public Environment {
 public:
  explicit ClipReward(std::unique_ptr<Environment> inner);

  const EnvSpec& spec() const override { return inner_->spec(); }
  Observation Reset() override { return inner_->Reset(); }
  Transition Step(int action) override;
  int OracleAction(const Observation& state) const override {
    return inner_->OracleAction(state);
  }
  int episode_step() const override { return inner_->episode_step(); }

 private:
  std::unique_ptr<Environment> inner_;
};

// Ends episodes after spec().max_episode_steps with truncated = true.
// Stepping a finished episode without Reset() is a contract violation.
class TimeLimit : public Environment {
 public:
  explicit TimeLimit(std::unique_ptr<Environment> inner);

  const EnvSpec& spec() const override { return inner_->spec(); }
  Observation Reset() override;
  Transition Step(int action) override;
  int OracleAction(const Observation& state) const override {
    return inner_->OracleAction(state);
  }
  int episode_step() const override { return steps_; }

 private:
  std::unique_ptr<Environment> inner_;
  int steps_ = 0;
  bool done_ = true;
};

}  // namespace air::envs

#endif  // AIR_ENVS_WRAPPERS_H_
