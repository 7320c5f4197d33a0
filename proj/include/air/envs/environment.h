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

#ifndef AIR_ENVS_ENVIRONMENT_H_
#define AIR_ENVS_ENVIRONMENT_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace air::envs {

using Observation = std::vector<double>;

struct EnvSpec {
  std::string name;
  int observation_dim = 1;
  int action_count = 2;
  int max_episode_steps = 100;
  std::uint64_t seed = 0;
  // Declared observation bounds, shared by every component.
  double observation_low = 0.0;
  double observation_high = 1.0;
};

struct Transition {
  Observation state;
  int action = 0;
  double reward = 0.0;
  Observation next_state;
  // Terminal masks the bootstrap term; truncation (time limit) does not.
  bool terminal = false;
  bool truncated = false;
};

// Episodic environment with a discrete action set.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual const EnvSpec& spec() const = 0;
  virtual Observation Reset() = 0;
  virtual Transition Step(int action) = 0;
  // Optimal action for `state`, lowest index on ties.
  virtual int OracleAction(const Observation& state) const = 0;
  virtual int episode_step() const = 0;
};

// One possible outcome of a (state, action) pair in a tabular model.
struct Outcome {
  double probability = 1.0;
  int next_state = 0;
  double reward = 0.0;
  bool terminal = false;
};

// Environments whose full dynamics are enumerable. Used by teachers,
// value-iteration checks and state decoding.
class TabularEnvironment : public Environment {
 public:
  virtual int num_states() const = 0;
  virtual int StateIndex(const Observation& state) const = 0;
  virtual Observation StateObservation(int index) const = 0;
  virtual std::vector<Outcome> Model(int state, int action) const = 0;
  virtual bool IsTerminalState(int state) const = 0;
  virtual std::vector<int> StartStates() const = 0;
};

}  // namespace air::envs

#endif  // AIR_ENVS_ENVIRONMENT_H_
