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

#ifndef AIR_IMITATION_ADVICE_BUFFER_H_
#define AIR_IMITATION_ADVICE_BUFFER_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "air/envs/environment.h"

namespace air::imitation {

struct AdvicePair {
  envs::Observation state;
  int action = 0;
};

// Append-only store of collected state/advice pairs. No capacity limit.
class AdviceBuffer {
 public:
  void Add(envs::Observation state, int action);

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<AdvicePair>& pairs() const { return pairs_; }
  const AdvicePair& operator[](std::size_t i) const { return pairs_[i]; }

  // Buffer size and step at the most recent imitation training.
  std::int64_t n_last() const { return n_last_; }
  std::int64_t t_last() const { return t_last_; }
  void MarkTrained(std::int64_t t);
  std::int64_t new_samples() const {
    return static_cast<std::int64_t>(pairs_.size()) - n_last_;
  }

 private:
  std::vector<AdvicePair> pairs_;
  std::int64_t n_last_ = 0;
  std::int64_t t_last_ = 0;
};

// Flat record file: one line per pair, "action,x0,x1,...". Values use the
// shortest round-trip decimal form.
void WriteAdviceBuffer(const std::filesystem::path& path,
                       const AdviceBuffer& buffer);
std::vector<AdvicePair> ReadAdviceBuffer(const std::filesystem::path& path);

}  // namespace air::imitation

#endif  // AIR_IMITATION_ADVICE_BUFFER_H_
