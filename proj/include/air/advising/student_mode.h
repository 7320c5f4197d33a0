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

#ifndef AIR_ADVISING_STUDENT_MODE_H_
#define AIR_ADVISING_STUDENT_MODE_H_

#include <array>
#include <optional>
#include <string_view>

namespace air::advising {

enum class StudentMode { kNA, kEA, kRA, kAR, kARA, kARAE, kAIR };

inline constexpr std::array<StudentMode, 7> kAllModes = {
    StudentMode::kNA,  StudentMode::kEA,   StudentMode::kRA, StudentMode::kAR,
    StudentMode::kARA, StudentMode::kARAE, StudentMode::kAIR};

struct ModeCapabilities {
  bool collects_advice = false;
  bool random_collection = false;     // RA's coin flip
  bool uncertainty_gated_collection = false;
  bool reuses_advice = false;
  bool auto_threshold = false;
  bool extended_reuse = false;
};

ModeCapabilities CapabilitiesOf(StudentMode mode);

// Canonical names: NA, EA, RA, AR, AR+A, AR+A+E, AIR.
std::string_view ModeName(StudentMode mode);
// Accepts canonical names and the underscore spellings (AR_A, AR_A_E).
std::optional<StudentMode> ParseMode(std::string_view name);

}  // namespace air::advising

#endif  // AIR_ADVISING_STUDENT_MODE_H_
