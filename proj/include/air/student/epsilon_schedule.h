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

#ifndef AIR_STUDENT_EPSILON_SCHEDULE_H_
#define AIR_STUDENT_EPSILON_SCHEDULE_H_

#include <algorithm>
#include <cstdint>

namespace air::student {

// eps(t) = init + (final - init) * min(1, t / decay_steps)
struct EpsilonSchedule {
  double eps_init = 1.0;
  double eps_final = 0.01;
  std::int64_t decay_steps = 500000;

  double operator()(std::int64_t t) const {
    if (t >= decay_steps) return eps_final;
    const double frac =
        static_cast<double>(std::max<std::int64_t>(t, 0)) /
        static_cast<double>(decay_steps);
    return eps_init * (1.0 - frac) + eps_final * frac;
  }
};

}  // namespace air::student

#endif  // AIR_STUDENT_EPSILON_SCHEDULE_H_
