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

#ifndef AIR_NN_LOSSES_H_
#define AIR_NN_LOSSES_H_

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "air/nn/network.h"

namespace air::nn {

struct LossAndGrad {
  double loss = 0.0;
  std::vector<double> gradients;
};

// Mean negative log-likelihood of `labels` under the classifier head.
// Dropout masks are drawn according to `mode`.
LossAndGrad NllLossAndGrad(Network& net, const Eigen::MatrixXd& inputs,
                           std::span<const int> labels,
                           Mode mode = Mode::kTrain);

// Same, with caller-fixed masks; used by gradient checks.
LossAndGrad NllLossAndGradWithMasks(const Network& net,
                                    const Eigen::MatrixXd& inputs,
                                    std::span<const int> labels,
                                    const DropoutMasks* masks);

// A minibatch of transitions laid out column-wise.
struct TdBatch {
  Eigen::MatrixXd states;
  Eigen::MatrixXd next_states;
  std::vector<int> actions;
  std::vector<double> rewards;
  // Terminal transitions drop the bootstrap term; truncated ones keep it.
  std::vector<bool> terminals;

  Eigen::Index size() const { return states.cols(); }
};

// Double-Q targets: y = r + gamma * Q_target(s', argmax_a Q_online(s', a)),
// or y = r on terminal transitions.
Eigen::VectorXd DoubleQTargets(const Network& online, const Network& target,
                               const TdBatch& batch, double gamma);

// Mean squared TD error between the Double-Q targets and Q_online(s, a).
LossAndGrad TdLossAndGrad(Network& online, const Network& target,
                          const TdBatch& batch, double gamma);

}  // namespace air::nn

#endif  // AIR_NN_LOSSES_H_
