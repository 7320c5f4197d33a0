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

#ifndef AIR_IMITATION_IMITATION_MODEL_H_
#define AIR_IMITATION_IMITATION_MODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "air/envs/environment.h"
#include "air/imitation/advice_buffer.h"
#include "air/nn/network.h"
#include "air/nn/optimizer.h"
#include "air/random.h"

namespace air::imitation {

struct ImitationConfig {
  std::vector<int> hidden_layers = {64};
  double dropout_rate = 0.35;
  int mc_passes = 100;
  double percentile = 90.0;
  double learning_rate = 1e-4;
  double adam_epsilon = 1e-8;
};

struct ImitationTriggerConfig {
  std::int64_t n_min = 2500;
  std::int64_t t_min = 50000;
  std::int64_t k_init = 200000;
  std::int64_t k_periodic = 50000;
  int batch_size = 32;

  void Validate() const;
};

// (|D| - n_last >= n_min) or (t - t_last >= t_min and
// |D| - n_last >= ceil(n_min / 2)).
bool ShouldTrain(const AdviceBuffer& buffer,
                 const ImitationTriggerConfig& trigger, std::int64_t t);

// Nearest-rank percentile: the element at 0-based index
// ceil(p / 100 * n) - 1 of the ascending sort. Empty input -> nullopt.
std::optional<double> NearestRankPercentile(std::vector<double> values,
                                            double percentile);

// Mean over output components of the across-pass variance of the
// probability vectors (columns of `probs`).
double MeanComponentVariance(const Eigen::MatrixXd& probs);

// Behavioral-cloning classifier of the teacher with MC-dropout uncertainty
// and an automatically tuned uncertainty threshold.
class ImitationModel {
 public:
  ImitationModel(int observation_dim, int action_count, ImitationConfig config,
                 std::uint64_t seed);

  // MC-dropout uncertainty; masks come from a stream reserved for this
  // purpose so queries never shift training randomness.
  double Uncertainty(const envs::Observation& state);
  double UncertaintyWithMasks(const envs::Observation& state,
                              const nn::DropoutMasks& masks) const;

  Eigen::VectorXd Probabilities(const envs::Observation& state) const;
  int GreedyAction(const envs::Observation& state) const;

  // `iterations` minibatch NLL steps on uniform samples (with replacement)
  // from the buffer, continuing from the current weights. Marks the buffer
  // as trained at step `t`. Returns the per-iteration loss trace.
  std::vector<double> Train(AdviceBuffer& buffer, std::int64_t iterations,
                            int batch_size, std::int64_t t);

  // Sets tau to the configured percentile of uncertainties over the buffer
  // pairs the model classifies correctly. If none are, tau is unchanged, or
  // 0 if it was never set (no reuse, collection stays open).
  double TuneThreshold(const AdviceBuffer& buffer);

  void SetThreshold(double tau) { tau_ = tau; }
  std::optional<double> tau() const { return tau_; }
  bool trained() const { return trained_; }
  int training_events() const { return training_events_; }
  std::int64_t total_iterations() const { return total_iterations_; }
  const ImitationConfig& config() const { return config_; }
  const nn::Network& net() const { return net_; }
  nn::Network& mutable_net() { return net_; }
  void set_trained(bool trained) { trained_ = trained; }

 private:
  ImitationConfig config_;
  nn::Network net_;
  nn::AdamOptimizer optimizer_;
  Rng sample_rng_;
  Rng mc_rng_;
  std::optional<double> tau_;
  bool trained_ = false;
  int training_events_ = 0;
  std::int64_t total_iterations_ = 0;
};

}  // namespace air::imitation

#endif  // AIR_IMITATION_IMITATION_MODEL_H_
