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

#ifndef AIR_ENVS_REGISTRY_H_
#define AIR_ENVS_REGISTRY_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "air/envs/environment.h"

namespace air::envs {

// Known names: "corridor", "keydoor", "slippery_keydoor".
struct EnvConfig {
  std::string name = "keydoor";
  int max_episode_steps = 0;  // 0 selects the environment default
  int corridor_length = 10;
  int corridor_actions = 4;
  double slip = 0.1;          // slippery_keydoor only
  double step_penalty = 0.01;  // keydoor variants only
};

std::vector<std::string> EnvironmentNames();

// The bare tabular environment.
std::unique_ptr<TabularEnvironment> MakeTabularEnvironment(
    const EnvConfig& config, std::uint64_t seed);

// Tabular environment wrapped in reward clipping and a time limit; this is
// what agents interact with.
std::unique_ptr<Environment> MakeEnvironment(const EnvConfig& config,
                                             std::uint64_t seed);

}  // namespace air::envs

#endif  // AIR_ENVS_REGISTRY_H_
