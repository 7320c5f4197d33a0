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

#include "air/nn/optimizer.h"

#include <cmath>

#include <Eigen/Core>

#include "air/errors.h"

namespace air::nn {

AdamOptimizer::AdamOptimizer(std::size_t num_parameters, AdamConfig config)
    : config_(config), m_(num_parameters, 0.0), v_(num_parameters, 0.0) {
  AIR_CHECK(config_.learning_rate > 0.0, "learning_rate must be positive");
}

void AdamOptimizer::Apply(std::span<double> parameters,
                          std::span<const double> gradients) {
  AIR_CHECK(parameters.size() == m_.size() && gradients.size() == m_.size(),
            "gradient shape does not match optimizer state");
  for (double g : gradients)
    if (!std::isfinite(g))
      throw TrainingDivergence("non-finite gradient component");

  ++step_count_;
  const double b1 = config_.beta1, b2 = config_.beta2;
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(step_count_));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(step_count_));
  using Vec = Eigen::Map<Eigen::ArrayXd>;
  const auto n = static_cast<Eigen::Index>(m_.size());
  Vec m(m_.data(), n), v(v_.data(), n), p(parameters.data(), n);
  const Eigen::Map<const Eigen::ArrayXd> g(gradients.data(), n);
  m = b1 * m + (1.0 - b1) * g;
  v = b2 * v + (1.0 - b2) * g.square();
  p -= config_.learning_rate * (m / c1) / ((v / c2).sqrt() + config_.epsilon);
}

}  // namespace air::nn
