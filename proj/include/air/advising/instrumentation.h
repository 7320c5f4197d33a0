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

#ifndef AIR_ADVISING_INSTRUMENTATION_H_
#define AIR_ADVISING_INSTRUMENTATION_H_

#include <cstdint>

#include "air/advising/orchestrator.h"
#include "air/teacher/teacher.h"

namespace air::advising {

// Measurement-only view of the teacher. Scores reused actions against the
// teacher's answer through unmetered shadow queries. It sees decisions only
// after they are made and never feeds anything back.
class Instrumentation {
 public:
  Instrumentation(teacher::AdviceChannel& channel, bool enabled);

  // Returns whether a reused action matched the teacher.
  bool OnDecision(const envs::Observation& state, const Decision& decision);

  bool enabled() const { return enabled_; }
  std::int64_t reuse_checked() const { return reuse_checked_; }
  std::int64_t reuse_hits() const { return reuse_hits_; }

 private:
  teacher::AdviceChannel& channel_;
  bool enabled_;
  std::int64_t reuse_checked_ = 0;
  std::int64_t reuse_hits_ = 0;
};

}  // namespace air::advising

#endif  // AIR_ADVISING_INSTRUMENTATION_H_
