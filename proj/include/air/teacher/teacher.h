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

#ifndef AIR_TEACHER_TEACHER_H_
#define AIR_TEACHER_TEACHER_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string_view>

#include "air/envs/environment.h"
#include "air/nn/network.h"

namespace air::advising {
class Instrumentation;
}  // namespace air::advising

namespace air::teacher {

enum class TeacherKind { kScriptedOracle, kDqnSnapshot };

// A fixed, deterministic policy: the same state always yields the same
// action.
class TeacherPolicy {
 public:
  virtual ~TeacherPolicy() = default;
  virtual int Act(const envs::Observation& state) const = 0;
  virtual TeacherKind kind() const = 0;
};

// Follows the environment's own optimal-action oracle. Holds a private
// environment instance used only as a model.
class ScriptedOracleTeacher : public TeacherPolicy {
 public:
  explicit ScriptedOracleTeacher(std::unique_ptr<envs::Environment> model);
  int Act(const envs::Observation& state) const override;
  TeacherKind kind() const override { return TeacherKind::kScriptedOracle; }

 private:
  std::unique_ptr<envs::Environment> model_;
};

// Greedy policy of a frozen Q-network.
class DqnSnapshotTeacher : public TeacherPolicy {
 public:
  explicit DqnSnapshotTeacher(nn::Network q_network);
  static std::unique_ptr<DqnSnapshotTeacher> Load(
      const std::filesystem::path& checkpoint);
  int Act(const envs::Observation& state) const override;
  TeacherKind kind() const override { return TeacherKind::kDqnSnapshot; }

 private:
  nn::Network q_network_;
};

// Imperfect teacher: for a fixed fraction `noise` of states (chosen by a
// seeded hash of the state) it answers with a hashed uniform action instead
// of the wrapped policy's. Still deterministic per state.
class NoisyTeacher : public TeacherPolicy {
 public:
  NoisyTeacher(std::unique_ptr<TeacherPolicy> inner, double noise,
               int action_count, std::uint64_t seed);
  int Act(const envs::Observation& state) const override;
  TeacherKind kind() const override { return inner_->kind(); }

 private:
  std::unique_ptr<TeacherPolicy> inner_;
  double noise_;
  int action_count_;
  std::uint64_t seed_;
};

struct BudgetLedger {
  std::int64_t initial_budget = 0;
  std::int64_t remaining = 0;
  std::int64_t metered_queries = 0;
  std::int64_t shadow_queries = 0;
};

// Only advising::Instrumentation can mint one of these, which keeps shadow
// queries out of every decision path.
class ShadowToken {
 private:
  ShadowToken() = default;
  friend class ::air::advising::Instrumentation;
};

// The budget-metered channel between student and teacher.
class AdviceChannel {
 public:
  AdviceChannel(std::shared_ptr<const TeacherPolicy> teacher,
                std::int64_t budget);

  // Metered query: returns the teacher's action and spends one unit.
  // Throws BudgetExhausted when nothing is left.
  int Advise(const envs::Observation& state);

  // Unmetered query for instrumentation.
  int ShadowAdvise(ShadowToken, const envs::Observation& state);

  const BudgetLedger& ledger() const { return ledger_; }
  std::int64_t remaining() const { return ledger_.remaining; }

 private:
  std::shared_ptr<const TeacherPolicy> teacher_;
  BudgetLedger ledger_;
};

}  // namespace air::teacher

#endif  // AIR_TEACHER_TEACHER_H_
