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

#include "air/nn/losses.h"

#include <string>

#include "air/errors.h"

namespace air::nn {
namespace {

void CheckLabels(const Network& net, const Eigen::MatrixXd& inputs,
                 std::span<const int> labels) {
  AIR_CHECK(inputs.cols() > 0, "empty batch");
  AIR_CHECK(static_cast<Eigen::Index>(labels.size()) == inputs.cols(),
            "label count does not match batch");
  AIR_CHECK(net.spec().head_kind == HeadKind::kSoftmaxClassifier,
            "NLL loss needs a classifier head");
  for (int y : labels)
    AIR_CHECK(y >= 0 && y < net.spec().output_dim,
              "label " + std::to_string(y) + " out of range");
}

LossAndGrad NllFromCache(const Network& net, const ForwardCache& cache,
                         std::span<const int> labels) {
  const Eigen::Index batch = cache.inputs.cols();
  const Eigen::MatrixXd log_probs = LogSoftmax(cache.head);
  Eigen::MatrixXd d_logits = log_probs.array().exp().matrix();
  double loss = 0.0;
  for (Eigen::Index i = 0; i < batch; ++i) {
    loss -= log_probs(labels[i], i);
    d_logits(labels[i], i) -= 1.0;
  }
  d_logits /= static_cast<double>(batch);
  return {loss / static_cast<double>(batch), net.Backward(cache, d_logits)};
}

}  // namespace

LossAndGrad NllLossAndGrad(Network& net, const Eigen::MatrixXd& inputs,
                           std::span<const int> labels, Mode mode) {
  CheckLabels(net, inputs, labels);
  ForwardCache cache;
  net.ForwardBatch(inputs, mode, &cache);
  return NllFromCache(net, cache, labels);
}

LossAndGrad NllLossAndGradWithMasks(const Network& net,
                                    const Eigen::MatrixXd& inputs,
                                    std::span<const int> labels,
                                    const DropoutMasks* masks) {
  CheckLabels(net, inputs, labels);
  ForwardCache cache;
  if (masks != nullptr)
    net.ForwardWithMasks(inputs, *masks, &cache);
  else
    net.Evaluate(inputs, &cache);
  return NllFromCache(net, cache, labels);
}

Eigen::VectorXd DoubleQTargets(const Network& online, const Network& target,
                               const TdBatch& batch, double gamma) {
  AIR_CHECK(gamma >= 0.0 && gamma < 1.0, "gamma must lie in [0, 1)");
  const Eigen::Index n = batch.size();
  AIR_CHECK(batch.next_states.cols() == n &&
                static_cast<Eigen::Index>(batch.actions.size()) == n &&
                static_cast<Eigen::Index>(batch.rewards.size()) == n &&
                static_cast<Eigen::Index>(batch.terminals.size()) == n,
            "TD batch fields disagree in length");
  const Eigen::MatrixXd q_next_online = online.Evaluate(batch.next_states);
  const Eigen::MatrixXd q_next_target = target.Evaluate(batch.next_states);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y(i) = batch.rewards[i];
    if (!batch.terminals[i]) {
      const int a_star = ArgMaxLowestIndex(q_next_online.col(i));
      y(i) += gamma * q_next_target(a_star, i);
    }
  }
  return y;
}

LossAndGrad TdLossAndGrad(Network& online, const Network& target,
                          const TdBatch& batch, double gamma) {
  AIR_CHECK(batch.size() > 0, "empty batch");
  AIR_CHECK(online.spec().head_kind == HeadKind::kQDueling,
            "TD loss needs a dueling Q head");
  const Eigen::VectorXd y = DoubleQTargets(online, target, batch, gamma);
  ForwardCache cache;
  const Eigen::MatrixXd q = online.ForwardBatch(batch.states, Mode::kTrain, &cache);
  const Eigen::Index n = batch.size();
  Eigen::MatrixXd d_q = Eigen::MatrixXd::Zero(q.rows(), n);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const int a = batch.actions[i];
    AIR_CHECK(a >= 0 && a < q.rows(), "action out of range");
    const double err = q(a, i) - y(i);
    loss += err * err;
    d_q(a, i) = 2.0 * err / static_cast<double>(n);
  }
  return {loss / static_cast<double>(n), online.Backward(cache, d_q)};
}

}  // namespace air::nn
