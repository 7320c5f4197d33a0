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

#include "air/imitation/imitation_model.h"

#include <algorithm>
#include <cmath>

#include "air/errors.h"
#include "air/nn/losses.h"

namespace air::imitation {

void ImitationTriggerConfig::Validate() const {
  AIR_CHECK(n_min > 0 && t_min > 0 && k_init > 0 && k_periodic > 0 &&
                batch_size > 0,
            "imitation trigger settings must all be positive");
}

bool ShouldTrain(const AdviceBuffer& buffer,
                 const ImitationTriggerConfig& trigger, std::int64_t t) {
  const std::int64_t fresh = buffer.new_samples();
  const std::int64_t half = (trigger.n_min + 1) / 2;
  return fresh >= trigger.n_min ||
         (t - buffer.t_last() >= trigger.t_min && fresh >= half);
}

std::optional<double> NearestRankPercentile(std::vector<double> values,
                                            double percentile) {
  AIR_CHECK(percentile > 0.0 && percentile <= 100.0,
            "percentile must lie in (0, 100]");
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  auto rank = static_cast<std::size_t>(std::ceil(percentile * n / 100.0));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  return values[rank - 1];
}

double MeanComponentVariance(const Eigen::MatrixXd& probs) {
  const Eigen::Index passes = probs.cols();
  if (passes <= 1) return 0.0;
  double total = 0.0;
  for (Eigen::Index r = 0; r < probs.rows(); ++r) {
    // Shifted by the first pass so identical passes give exactly zero.
    const Eigen::ArrayXd d = probs.row(r).array() - probs(r, 0);
    const double mean = d.mean();
    total += (d - mean).square().mean();
  }
  return total / static_cast<double>(probs.rows());
}

namespace {

nn::NetworkSpec ClassifierSpec(int observation_dim, int action_count,
                               const ImitationConfig& config) {
  nn::NetworkSpec spec;
  spec.input_dim = observation_dim;
  spec.hidden_layers = config.hidden_layers;
  spec.output_dim = action_count;
  spec.dropout_rate = config.dropout_rate;
  spec.head_kind = nn::HeadKind::kSoftmaxClassifier;
  return spec;
}

Eigen::MatrixXd Replicate(const envs::Observation& state, int columns) {
  const auto dim = static_cast<Eigen::Index>(state.size());
  return Eigen::Map<const Eigen::VectorXd>(state.data(), dim)
      .replicate(1, columns);
}

}  // namespace

ImitationModel::ImitationModel(int observation_dim, int action_count,
                               ImitationConfig config, std::uint64_t seed)
    : config_(std::move(config)),
      net_(ClassifierSpec(observation_dim, action_count, config_),
           DeriveSeed(seed, "imitation-net")),
      optimizer_(net_.num_parameters(),
                 nn::AdamConfig{config_.learning_rate, 0.9, 0.999,
                                config_.adam_epsilon}),
      sample_rng_(DeriveSeed(seed, "imitation-sample")),
      mc_rng_(DeriveSeed(seed, "imitation-mc")) {
  AIR_CHECK(config_.mc_passes > 0, "mc_passes must be positive");
  AIR_CHECK(config_.percentile > 0.0 && config_.percentile <= 100.0,
            "percentile must lie in (0, 100]");
}

double ImitationModel::Uncertainty(const envs::Observation& state) {
  // Without dropout (or with a single pass) every pass is identical.
  if (config_.dropout_rate == 0.0 || config_.mc_passes == 1 ||
      config_.hidden_layers.empty())
    return 0.0;
  const nn::DropoutMasks masks = net_.DrawMasks(config_.mc_passes, mc_rng_);
  return UncertaintyWithMasks(state, masks);
}

double ImitationModel::UncertaintyWithMasks(
    const envs::Observation& state, const nn::DropoutMasks& masks) const {
  const int passes =
      masks.layers.empty() ? 1 : static_cast<int>(masks.layers[0].cols());
  return MeanComponentVariance(
      net_.ForwardWithMasks(Replicate(state, passes), masks));
}

Eigen::VectorXd ImitationModel::Probabilities(
    const envs::Observation& state) const {
  return net_.Evaluate(state);
}

int ImitationModel::GreedyAction(const envs::Observation& state) const {
  return nn::ArgMaxLowestIndex(net_.Evaluate(state));
}

std::vector<double> ImitationModel::Train(AdviceBuffer& buffer,
                                          std::int64_t iterations,
                                          int batch_size, std::int64_t t) {
  AIR_CHECK(!buffer.empty(), "imitation training on an empty buffer");
  AIR_CHECK(iterations > 0 && batch_size > 0,
            "iterations and batch size must be positive");
  const auto dim = static_cast<Eigen::Index>(buffer[0].state.size());
  const int n = static_cast<int>(buffer.size());
  Eigen::MatrixXd inputs(dim, batch_size);
  std::vector<int> labels(batch_size);
  std::vector<double> trace;
  trace.reserve(static_cast<std::size_t>(iterations));
  for (std::int64_t it = 0; it < iterations; ++it) {
    for (int i = 0; i < batch_size; ++i) {
      const AdvicePair& pair = buffer[UniformInt(sample_rng_, n)];
      inputs.col(i) = Eigen::Map<const Eigen::VectorXd>(pair.state.data(), dim);
      labels[i] = pair.action;
    }
    nn::LossAndGrad lg = nn::NllLossAndGrad(net_, inputs, labels, nn::Mode::kTrain);
    optimizer_.Apply(net_.mutable_parameters(), lg.gradients);
    trace.push_back(lg.loss);
  }
  trained_ = true;
  ++training_events_;
  total_iterations_ += iterations;
  buffer.MarkTrained(t);
  return trace;
}

double ImitationModel::TuneThreshold(const AdviceBuffer& buffer) {
  AIR_CHECK(trained_, "threshold tuning before any training");
  std::vector<double> known;
  for (const AdvicePair& pair : buffer.pairs())
    if (GreedyAction(pair.state) == pair.action)
      known.push_back(Uncertainty(pair.state));
  if (auto tau = NearestRankPercentile(std::move(known), config_.percentile)) {
    tau_ = *tau;
  } else if (!tau_) {
    // Zero admits nothing to reuse (strict <) and sends every uncertain
    // state to collection (strict >).
    tau_ = 0.0;
  }
  return *tau_;
}

}  // namespace air::imitation
