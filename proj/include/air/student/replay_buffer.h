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

#ifndef AIR_STUDENT_REPLAY_BUFFER_H_
#define AIR_STUDENT_REPLAY_BUFFER_H_

#include <cstdint>
#include <vector>

#include "air/envs/environment.h"
#include "air/nn/losses.h"
#include "air/random.h"

namespace air::student {

// Fixed-capacity FIFO ring of transitions with uniform sampling (with
// replacement).
class ReplayBuffer {
 public:
  ReplayBuffer(std::size_t capacity, std::size_t min_size_to_train);

  void Add(envs::Transition transition);
  std::size_t size() const { return storage_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::size_t min_size_to_train() const { return min_size_; }
  bool CanSample() const { return size() >= min_size_; }
  std::int64_t total_added() const { return total_added_; }

  // i-th oldest stored transition.
  const envs::Transition& at(std::size_t i) const;

  // Throws ContractViolation before the warmup size is reached.
  nn::TdBatch Sample(std::size_t batch_size, Rng& rng) const;

 private:
  std::size_t capacity_;
  std::size_t min_size_;
  std::vector<envs::Transition> storage_;
  std::size_t next_ = 0;  // slot of the next write once full
  std::int64_t total_added_ = 0;
};

}  // namespace air::student

#endif  // AIR_STUDENT_REPLAY_BUFFER_H_
