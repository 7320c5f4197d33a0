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

#include "air/envs/gridworlds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "air/errors.h"

namespace air::envs {
namespace {

int DecodeOneHot(const Observation& state, int expected_dim) {
  AIR_CHECK(static_cast<int>(state.size()) == expected_dim,
            "observation has wrong length");
  for (int i = 0; i < expected_dim; ++i)
    if (state[i] == 1.0) return i;
  throw ContractViolation("observation is not a one-hot state");
}

Observation OneHot(int index, int dim) {
  Observation obs(dim, 0.0);
  obs[index] = 1.0;
  return obs;
}

}  // namespace

// ---------------------------------------------------------------- Corridor

CorridorWorld::CorridorWorld(int length, int action_count,
                             int max_episode_steps, std::uint64_t seed)
    : length_(length) {
  AIR_CHECK(length >= 2, "corridor length must be at least 2");
  AIR_CHECK(action_count >= 2, "corridor needs back and forward actions");
  spec_ = EnvSpec{"corridor", length, action_count, max_episode_steps, seed};
}

Observation CorridorWorld::Reset() {
  position_ = 0;
  episode_step_ = 0;
  done_ = false;
  return OneHot(position_, length_);
}

Transition CorridorWorld::Step(int action) {
  AIR_CHECK(!done_, "step after terminal without reset");
  AIR_CHECK(action >= 0 && action < spec_.action_count, "action out of range");
  Transition tr;
  tr.state = OneHot(position_, length_);
  tr.action = action;
  const Outcome out = Model(position_, action).front();
  position_ = out.next_state;
  tr.reward = out.reward;
  tr.terminal = out.terminal;
  tr.next_state = OneHot(position_, length_);
  ++episode_step_;
  done_ = tr.terminal;
  return tr;
}

int CorridorWorld::OracleAction(const Observation& state) const {
  DecodeOneHot(state, length_);
  return kForward;
}

int CorridorWorld::StateIndex(const Observation& state) const {
  return DecodeOneHot(state, length_);
}

Observation CorridorWorld::StateObservation(int index) const {
  AIR_CHECK(index >= 0 && index < length_, "state index out of range");
  return OneHot(index, length_);
}

std::vector<Outcome> CorridorWorld::Model(int state, int action) const {
  AIR_CHECK(state >= 0 && state < length_, "state index out of range");
  if (IsTerminalState(state)) return {{1.0, state, 0.0, true}};
  int next = state;
  if (action == kBack) next = std::max(0, state - 1);
  if (action == kForward) next = state + 1;
  const bool goal = next == length_ - 1;
  return {{1.0, next, goal ? 1.0 : 0.0, goal}};
}

// ----------------------------------------------------------------- KeyDoor

std::vector<std::string> KeyDoorWorld::DefaultLayout() {
  return {
      "#########",
      "#S..#...#",
      "#...#...#",
      "#...#.D.#",
      "#.......#",
      "#K..#...#",
      "#########",
  };
}

KeyDoorWorld::KeyDoorWorld(std::vector<std::string> layout, double slip,
                           double step_penalty, int max_episode_steps,
                           std::uint64_t seed, std::string name)
    : layout_(std::move(layout)),
      slip_(slip),
      step_penalty_(step_penalty),
      rng_(seed) {
  AIR_CHECK(slip >= 0.0 && slip < 1.0, "slip must lie in [0, 1)");
  int starts = 0, keys = 0, doors = 0;
  cell_at_.assign(layout_.size(), {});
  for (int r = 0; r < static_cast<int>(layout_.size()); ++r) {
    cell_at_[r].assign(layout_[r].size(), -1);
    for (int c = 0; c < static_cast<int>(layout_[r].size()); ++c) {
      const char ch = layout_[r][c];
      if (ch == '#') continue;
      AIR_CHECK(ch == '.' || ch == 'S' || ch == 'K' || ch == 'D',
                std::string("unknown layout character '") + ch + "'");
      const int cell = static_cast<int>(cells_.size());
      cell_at_[r][c] = cell;
      cells_.emplace_back(r, c);
      if (ch == 'S') start_cell_ = cell, ++starts;
      if (ch == 'K') key_cell_ = cell, ++keys;
      if (ch == 'D') door_cell_ = cell, ++doors;
    }
  }
  AIR_CHECK(starts == 1 && keys == 1 && doors == 1,
            "layout needs exactly one S, K and D");
  spec_ = EnvSpec{std::move(name), num_states(), 4, max_episode_steps, seed};
  ComputeOraclePolicy();
}

bool KeyDoorWorld::IsTerminalState(int state) const {
  return state / 2 == door_cell_ && state % 2 == 1;
}

int KeyDoorWorld::Move(int state, int action) const {
  const int cell = state / 2;
  bool key = state % 2 == 1;
  auto [r, c] = cells_[cell];
  switch (action) {
    case kUp: --r; break;
    case kDown: ++r; break;
    case kLeft: --c; break;
    case kRight: ++c; break;
    default: throw ContractViolation("action out of range");
  }
  int next = cell;
  if (r >= 0 && r < static_cast<int>(cell_at_.size()) && c >= 0 &&
      c < static_cast<int>(cell_at_[r].size()) && cell_at_[r][c] >= 0) {
    const int target = cell_at_[r][c];
    if (target != door_cell_ || key) next = target;
  }
  if (next == key_cell_) key = true;
  return next * 2 + (key ? 1 : 0);
}

std::vector<Outcome> KeyDoorWorld::Model(int state, int action) const {
  AIR_CHECK(state >= 0 && state < num_states(), "state index out of range");
  AIR_CHECK(action >= 0 && action < 4, "action out of range");
  if (IsTerminalState(state)) return {{1.0, state, 0.0, true}};
  std::vector<Outcome> outcomes;
  for (int executed = 0; executed < 4; ++executed) {
    double p = slip_ / 4.0;
    if (executed == action) p += 1.0 - slip_;
    if (p == 0.0) continue;
    const int next = Move(state, executed);
    auto it = std::find_if(outcomes.begin(), outcomes.end(),
                           [next](const Outcome& o) { return o.next_state == next; });
    if (it != outcomes.end()) {
      it->probability += p;
      continue;
    }
    const bool goal = IsTerminalState(next);
    outcomes.push_back({p, next, goal ? 1.0 : -step_penalty_, goal});
  }
  return outcomes;
}

void KeyDoorWorld::ComputeOraclePolicy() {
  const int n = num_states();
  oracle_policy_.assign(n, 0);
  if (slip_ == 0.0) {
    // Shortest-path distances to the goal by repeated relaxation.
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::vector<int> dist(n, kInf);
    for (int s = 0; s < n; ++s)
      if (IsTerminalState(s)) dist[s] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (int s = 0; s < n; ++s) {
        if (IsTerminalState(s)) continue;
        for (int a = 0; a < 4; ++a) {
          const int d = dist[Move(s, a)] + 1;
          if (d < dist[s]) dist[s] = d, changed = true;
        }
      }
    }
    for (int s = 0; s < n; ++s) {
      int best = 0;
      for (int a = 1; a < 4; ++a)
        if (dist[Move(s, a)] < dist[Move(s, best)]) best = a;
      oracle_policy_[s] = best;
    }
    return;
  }
  // Expected undiscounted return under slip, by value iteration.
  std::vector<double> value(n, 0.0);
  auto q = [&](int s, int a) {
    double total = 0.0;
    for (const Outcome& o : Model(s, a))
      total += o.probability * (o.reward + (o.terminal ? 0.0 : value[o.next_state]));
    return total;
  };
  for (int iter = 0; iter < 100000; ++iter) {
    double delta = 0.0;
    for (int s = 0; s < n; ++s) {
      if (IsTerminalState(s)) continue;
      double best = -std::numeric_limits<double>::infinity();
      for (int a = 0; a < 4; ++a) best = std::max(best, q(s, a));
      delta = std::max(delta, std::abs(best - value[s]));
      value[s] = best;
    }
    if (delta < 1e-12) break;
  }
  for (int s = 0; s < n; ++s) {
    if (IsTerminalState(s)) continue;
    double best_q = q(s, 0);
    for (int a = 1; a < 4; ++a) best_q = std::max(best_q, q(s, a));
    for (int a = 0; a < 4; ++a)
      if (q(s, a) >= best_q - 1e-9) {
        oracle_policy_[s] = a;
        break;
      }
  }
}

Observation KeyDoorWorld::Reset() {
  cell_ = start_cell_;
  has_key_ = cell_ == key_cell_;
  episode_step_ = 0;
  done_ = false;
  return OneHot(current_state(), num_states());
}

Transition KeyDoorWorld::Step(int action) {
  AIR_CHECK(!done_, "step after terminal without reset");
  AIR_CHECK(action >= 0 && action < 4, "action out of range");
  Transition tr;
  tr.state = OneHot(current_state(), num_states());
  tr.action = action;
  int executed = action;
  if (slip_ > 0.0 && UniformUnit(rng_) < slip_) executed = UniformInt(rng_, 4);
  const int next = Move(current_state(), executed);
  cell_ = next / 2;
  has_key_ = next % 2 == 1;
  tr.terminal = IsTerminalState(next);
  tr.reward = tr.terminal ? 1.0 : -step_penalty_;
  tr.next_state = OneHot(next, num_states());
  ++episode_step_;
  done_ = tr.terminal;
  return tr;
}

int KeyDoorWorld::OracleAction(const Observation& state) const {
  return oracle_policy_[StateIndex(state)];
}

int KeyDoorWorld::StateIndex(const Observation& state) const {
  return DecodeOneHot(state, num_states());
}

Observation KeyDoorWorld::StateObservation(int index) const {
  AIR_CHECK(index >= 0 && index < num_states(), "state index out of range");
  return OneHot(index, num_states());
}

}  // namespace air::envs
