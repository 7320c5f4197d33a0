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

#include "air/envs/wrappers.h"

#include <algorithm>

#include "air/errors.h"

namespace air::envs {

ClipReward::ClipReward(std::unique_ptr<Environment> inner)
    : inner_(std::move(inner)) {}

Transition ClipReward::Step(int action) {
  Transition tr = inner_->Step(action);
  tr.reward = std::clamp(tr.reward, -1.0, 1.0);
  return tr;
}

TimeLimit::TimeLimit(std::unique_ptr<Environment> inner)
    : inner_(std::move(inner)) {
  AIR_CHECK(inner_->spec().max_episode_steps > 0,
            "max_episode_steps must be positive");
}

Observation TimeLimit::Reset() {
  steps_ = 0;
  done_ = false;
  return inner_->Reset();
}

Transition TimeLimit::Step(int action) {
  AIR_CHECK(!done_, "step after episode end without reset");
  Transition tr = inner_->Step(action);
  ++steps_;
  tr.truncated = !tr.terminal && steps_ >= inner_->spec().max_episode_steps;
  done_ = tr.terminal || tr.truncated;
  return tr;
}

}  // namespace air::envs
