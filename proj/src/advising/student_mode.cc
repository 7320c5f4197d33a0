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

#include "air/advising/student_mode.h"

namespace air::advising {

ModeCapabilities CapabilitiesOf(StudentMode mode) {
  ModeCapabilities caps;
  switch (mode) {
    case StudentMode::kNA:
      break;
    case StudentMode::kEA:
      caps.collects_advice = true;
      break;
    case StudentMode::kRA:
      caps.collects_advice = true;
      caps.random_collection = true;
      break;
    case StudentMode::kAR:
      caps.collects_advice = true;
      caps.reuses_advice = true;
      break;
    case StudentMode::kARA:
      caps.collects_advice = true;
      caps.reuses_advice = true;
      caps.auto_threshold = true;
      break;
    case StudentMode::kARAE:
      caps.collects_advice = true;
      caps.reuses_advice = true;
      caps.auto_threshold = true;
      caps.extended_reuse = true;
      break;
    case StudentMode::kAIR:
      caps.collects_advice = true;
      caps.uncertainty_gated_collection = true;
      caps.reuses_advice = true;
      caps.auto_threshold = true;
      caps.extended_reuse = true;
      break;
  }
  return caps;
}

std::string_view ModeName(StudentMode mode) {
  switch (mode) {
    case StudentMode::kNA: return "NA";
    case StudentMode::kEA: return "EA";
    case StudentMode::kRA: return "RA";
    case StudentMode::kAR: return "AR";
    case StudentMode::kARA: return "AR+A";
    case StudentMode::kARAE: return "AR+A+E";
    case StudentMode::kAIR: return "AIR";
  }
  return "?";
}

std::optional<StudentMode> ParseMode(std::string_view name) {
  for (StudentMode m : kAllModes)
    if (ModeName(m) == name) return m;
  if (name == "AR_A") return StudentMode::kARA;
  if (name == "AR_A_E") return StudentMode::kARAE;
  return std::nullopt;
}

}  // namespace air::advising
