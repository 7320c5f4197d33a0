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

#include "air/teacher/teacher.h"

#include <cstring>

#include "air/errors.h"
#include "air/nn/checkpoint.h"
#include "air/random.h"

namespace air::teacher {

ScriptedOracleTeacher::ScriptedOracleTeacher(
    std::unique_ptr<envs::Environment> model)
    : model_(std::move(model)) {
  AIR_CHECK(model_ != nullptr, "scripted teacher needs an environment model");
}

int ScriptedOracleTeacher::Act(const envs::Observation& state) const {
  return model_->OracleAction(state);
}

DqnSnapshotTeacher::DqnSnapshotTeacher(nn::Network q_network)
    : q_network_(std::move(q_network)) {}

std::unique_ptr<DqnSnapshotTeacher> DqnSnapshotTeacher::Load(
    const std::filesystem::path& checkpoint) {
  return std::make_unique<DqnSnapshotTeacher>(
      nn::LoadCheckpoint(checkpoint).network);
}

int DqnSnapshotTeacher::Act(const envs::Observation& state) const {
  return nn::ArgMaxLowestIndex(q_network_.Evaluate(state));
}

NoisyTeacher::NoisyTeacher(std::unique_ptr<TeacherPolicy> inner, double noise,
                           int action_count, std::uint64_t seed)
    : inner_(std::move(inner)),
      noise_(noise),
      action_count_(action_count),
      seed_(seed) {
  AIR_CHECK(inner_ != nullptr, "noisy teacher needs a policy to wrap");
  AIR_CHECK(noise >= 0.0 && noise <= 1.0, "teacher noise must lie in [0, 1]");
  AIR_CHECK(action_count >= 2, "action_count must be at least 2");
}

int NoisyTeacher::Act(const envs::Observation& state) const {
  std::uint64_t h = SplitMix64(seed_);
  for (double x : state) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof(bits));
    h = SplitMix64(h ^ bits);
  }
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  if (u < noise_)
    return static_cast<int>(SplitMix64(h) % static_cast<std::uint64_t>(action_count_));
  return inner_->Act(state);
}

AdviceChannel::AdviceChannel(std::shared_ptr<const TeacherPolicy> teacher,
                             std::int64_t budget)
    : teacher_(std::move(teacher)) {
  AIR_CHECK(teacher_ != nullptr, "advice channel needs a teacher");
  AIR_CHECK(budget >= 0, "budget must be non-negative");
  ledger_.initial_budget = budget;
  ledger_.remaining = budget;
}

int AdviceChannel::Advise(const envs::Observation& state) {
  if (ledger_.remaining <= 0)
    throw BudgetExhausted("advice requested with no budget left");
  const int action = teacher_->Act(state);
  --ledger_.remaining;
  ++ledger_.metered_queries;
  return action;
}

int AdviceChannel::ShadowAdvise(ShadowToken, const envs::Observation& state) {
  ++ledger_.shadow_queries;
  return teacher_->Act(state);
}

}  // namespace air::teacher
