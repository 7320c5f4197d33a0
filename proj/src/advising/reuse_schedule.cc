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

#include "air/advising/reuse_schedule.h"

#include "air/errors.h"

namespace air::advising {

void ReuseSchedule::Validate() const {
  AIR_CHECK(rho_init >= 0.0 && rho_init <= 1.0, "rho_init must lie in [0, 1]");
  AIR_CHECK(rho_final >= 0.0 && rho_final <= rho_init,
            "rho_final must lie in [0, rho_init]");
  AIR_CHECK(decay_start >= 0 && decay_end >= decay_start,
            "reuse decay window must satisfy 0 <= start <= end");
}

double ReuseSchedule::Rho(std::int64_t t) const {
  if (t <= decay_start) return rho_init;
  if (t >= decay_end) return rho_final;
  const double frac = static_cast<double>(t - decay_start) /
                      static_cast<double>(decay_end - decay_start);
  return rho_init * (1.0 - frac) + rho_final * frac;
}

}  // namespace air::advising
