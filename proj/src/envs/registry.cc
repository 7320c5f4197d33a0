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

#include "air/envs/registry.h"

#include "air/envs/gridworlds.h"
#include "air/envs/wrappers.h"
#include "air/errors.h"

namespace air::envs {

std::vector<std::string> EnvironmentNames() {
  return {"corridor", "keydoor", "slippery_keydoor"};
}

std::unique_ptr<TabularEnvironment> MakeTabularEnvironment(
    const EnvConfig& config, std::uint64_t seed) {
  if (config.name == "corridor") {
    const int steps = config.max_episode_steps > 0 ? config.max_episode_steps
                                                   : 5 * config.corridor_length;
    return std::make_unique<CorridorWorld>(
        config.corridor_length, config.corridor_actions, steps, seed);
  }
  const int steps = config.max_episode_steps > 0 ? config.max_episode_steps : 100;
  if (config.name == "keydoor")
    return std::make_unique<KeyDoorWorld>(KeyDoorWorld::DefaultLayout(), 0.0,
                                          config.step_penalty, steps, seed);
  if (config.name == "slippery_keydoor")
    return std::make_unique<KeyDoorWorld>(KeyDoorWorld::DefaultLayout(),
                                          config.slip, config.step_penalty,
                                          steps, seed, "slippery_keydoor");
  throw ContractViolation("unknown environment '" + config.name + "'");
}

std::unique_ptr<Environment> MakeEnvironment(const EnvConfig& config,
                                             std::uint64_t seed) {
  return std::make_unique<TimeLimit>(
      std::make_unique<ClipReward>(MakeTabularEnvironment(config, seed)));
}

}  // namespace air::envs
