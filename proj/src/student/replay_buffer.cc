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

#include "air/student/replay_buffer.h"

#include "air/errors.h"

namespace air::student {

ReplayBuffer::ReplayBuffer(std::size_t capacity, std::size_t min_size_to_train)
    : capacity_(capacity), min_size_(min_size_to_train) {
  AIR_CHECK(capacity > 0, "replay capacity must be positive");
  AIR_CHECK(min_size_to_train > 0, "replay min size must be positive");
  storage_.reserve(std::min<std::size_t>(capacity, 1 << 16));
}

void ReplayBuffer::Add(envs::Transition transition) {
  ++total_added_;
  if (storage_.size() < capacity_) {
    storage_.push_back(std::move(transition));
    return;
  }
  storage_[next_] = std::move(transition);
  next_ = (next_ + 1) % capacity_;
}

const envs::Transition& ReplayBuffer::at(std::size_t i) const {
  AIR_CHECK(i < storage_.size(), "replay index out of range");
  return storage_[(next_ + i) % storage_.size()];
}

nn::TdBatch ReplayBuffer::Sample(std::size_t batch_size, Rng& rng) const {
  AIR_CHECK(CanSample(), "replay sampled before reaching its minimum size");
  AIR_CHECK(batch_size > 0, "batch size must be positive");
  const auto dim = static_cast<Eigen::Index>(storage_.front().state.size());
  const auto n = static_cast<Eigen::Index>(batch_size);
  nn::TdBatch batch;
  batch.states.resize(dim, n);
  batch.next_states.resize(dim, n);
  batch.actions.resize(batch_size);
  batch.rewards.resize(batch_size);
  batch.terminals.resize(batch_size);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& tr = storage_[UniformInt(rng, static_cast<int>(storage_.size()))];
    batch.states.col(i) = Eigen::Map<const Eigen::VectorXd>(tr.state.data(), dim);
    batch.next_states.col(i) =
        Eigen::Map<const Eigen::VectorXd>(tr.next_state.data(), dim);
    batch.actions[i] = tr.action;
    batch.rewards[i] = tr.reward;
    batch.terminals[i] = tr.terminal;
  }
  return batch;
}

}  // namespace air::student
