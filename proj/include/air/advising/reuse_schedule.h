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

#ifndef AIR_ADVISING_REUSE_SCHEDULE_H_
#define AIR_ADVISING_REUSE_SCHEDULE_H_

#include <cstdint>

namespace air::advising {

// Per-episode probability of enabling reuse: rho_init up to decay_start,
// linear down to rho_final at decay_end, constant afterwards.
struct ReuseSchedule {
  double rho_init = 0.5;
  double rho_final = 0.1;
  std::int64_t decay_start = 500000;
  std::int64_t decay_end = 2000000;

  void Validate() const;
  double Rho(std::int64_t t) const;
};

}  // namespace air::advising

#endif  // AIR_ADVISING_REUSE_SCHEDULE_H_
