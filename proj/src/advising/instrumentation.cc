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

#include "air/advising/instrumentation.h"

namespace air::advising {

Instrumentation::Instrumentation(teacher::AdviceChannel& channel, bool enabled)
    : channel_(channel), enabled_(enabled) {}

bool Instrumentation::OnDecision(const envs::Observation& state,
                                 const Decision& decision) {
  if (!enabled_ || decision.source != ActionSource::kReusedAdvice) return false;
  ++reuse_checked_;
  const bool hit =
      channel_.ShadowAdvise(teacher::ShadowToken{}, state) == decision.action;
  if (hit) ++reuse_hits_;
  return hit;
}

}  // namespace air::advising
