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

#ifndef AIR_ENVS_GRIDWORLDS_H_
#define AIR_ENVS_GRIDWORLDS_H_

#include <string>
#include <vector>

#include "air/envs/environment.h"
#include "air/random.h"

namespace air::envs {

// A chain of cells 0..length-1 with the goal at the far end.
// Actions: 0 back, 1 forward, 2.. distractors that leave the agent in place.
// Reward 0 everywhere except +1 on reaching the goal.
class CorridorWorld : public TabularEnvironment {
 public:
  static constexpr int kBack = 0;
  static constexpr int kForward = 1;

  CorridorWorld(int length, int action_count, int max_episode_steps,
                std::uint64_t seed);

  const EnvSpec& spec() const override { return spec_; }
  Observation Reset() override;
  Transition Step(int action) override;
  int OracleAction(const Observation& state) const override;
  int episode_step() const override { return episode_step_; }

  int num_states() const override { return length_; }
  int StateIndex(const Observation& state) const override;
  Observation StateObservation(int index) const override;
  std::vector<Outcome> Model(int state, int action) const override;
  bool IsTerminalState(int state) const override {
    return state == length_ - 1;
  }
  std::vector<int> StartStates() const override { return {0}; }

  int position() const { return position_; }

 private:
  EnvSpec spec_;
  int length_;
  int position_ = 0;
  int episode_step_ = 0;
  bool done_ = true;
};

// Grid with walls, a key and a door. The door is impassable until the key
// has been picked up (by stepping on its cell); stepping onto the door with
// the key ends the episode with +1. Every other step costs `step_penalty`.
// With slip > 0 the executed action is replaced by a uniformly random one
// with that probability.
//
// Layout characters: '#' wall, '.' floor, 'S' start, 'K' key, 'D' door.
// Observations one-hot encode the joint (cell, key-held) state.
// Actions: 0 up, 1 down, 2 left, 3 right.
class KeyDoorWorld : public TabularEnvironment {
 public:
  static constexpr int kUp = 0;
  static constexpr int kDown = 1;
  static constexpr int kLeft = 2;
  static constexpr int kRight = 3;

  static std::vector<std::string> DefaultLayout();

  KeyDoorWorld(std::vector<std::string> layout, double slip,
               double step_penalty, int max_episode_steps, std::uint64_t seed,
               std::string name = "keydoor");

  const EnvSpec& spec() const override { return spec_; }
  Observation Reset() override;
  Transition Step(int action) override;
  int OracleAction(const Observation& state) const override;
  int episode_step() const override { return episode_step_; }

  int num_states() const override { return 2 * num_cells(); }
  int StateIndex(const Observation& state) const override;
  Observation StateObservation(int index) const override;
  std::vector<Outcome> Model(int state, int action) const override;
  bool IsTerminalState(int state) const override;
  std::vector<int> StartStates() const override { return {start_state()}; }

  int num_cells() const { return static_cast<int>(cells_.size()); }
  int start_state() const { return start_cell_ * 2; }
  int current_state() const { return cell_ * 2 + (has_key_ ? 1 : 0); }
  double slip() const { return slip_; }
  // (row, col) of a cell index.
  std::pair<int, int> CellPosition(int cell) const { return cells_[cell]; }

 private:
  // Deterministic successor of (cell, key) under `action`.
  int Move(int state, int action) const;
  void ComputeOraclePolicy();

  EnvSpec spec_;
  std::vector<std::string> layout_;
  double slip_;
  double step_penalty_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> cell_at_;  // -1 for walls
  int start_cell_ = 0;
  int key_cell_ = 0;
  int door_cell_ = 0;
  std::vector<int> oracle_policy_;

  Rng rng_;
  int cell_ = 0;
  bool has_key_ = false;
  int episode_step_ = 0;
  bool done_ = true;
};

}  // namespace air::envs

#endif  // AIR_ENVS_GRIDWORLDS_H_
