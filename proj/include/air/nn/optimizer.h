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

#ifndef AIR_NN_OPTIMIZER_H_
#define AIR_NN_OPTIMIZER_H_

#include <cstdint>
#include <span>
#include <vector>

namespace air::nn {

struct AdamConfig {
  double learning_rate = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Adam with bias correction. Accumulators are sized once from the parameter
// count and must keep matching it.
class AdamOptimizer {
 public:
  AdamOptimizer(std::size_t num_parameters, AdamConfig config);

  // Throws TrainingDivergence (before touching anything) if a gradient
  // component is not finite.
  void Apply(std::span<double> parameters, std::span<const double> gradients);

  const AdamConfig& config() const { return config_; }
  std::int64_t step_count() const { return step_count_; }
  std::span<const double> first_moment() const { return m_; }
  std::span<const double> second_moment() const { return v_; }

 private:
  AdamConfig config_;
  std::vector<double> m_;
  std::vector<double> v_;
  std::int64_t step_count_ = 0;
};

}  // namespace air::nn

#endif  // AIR_NN_OPTIMIZER_H_
