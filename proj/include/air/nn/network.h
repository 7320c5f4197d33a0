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

#ifndef AIR_NN_NETWORK_H_
#define AIR_NN_NETWORK_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "air/random.h"

namespace air::nn {

enum class HeadKind { kQDueling, kSoftmaxClassifier };
enum class Mode { kTrain, kEval, kMcSample };

std::string_view HeadKindName(HeadKind kind);
HeadKind ParseHeadKind(std::string_view name);

struct NetworkSpec {
  int input_dim = 1;
  std::vector<int> hidden_layers;
  int output_dim = 2;
  // Applied to every hidden activation; inverted scaling at train time.
  double dropout_rate = 0.0;
  HeadKind head_kind = HeadKind::kSoftmaxClassifier;

  void Validate() const;
  std::size_t ParameterCount() const;
  bool operator==(const NetworkSpec&) const = default;
};

// Scaled keep masks, one (units x batch) array per hidden layer. Entries are
// either 0 or 1 / (1 - dropout_rate).
struct DropoutMasks {
  std::vector<Eigen::ArrayXXd> layers;
};

// Intermediate values of a batched forward pass, kept for Backward().
struct ForwardCache {
  Eigen::MatrixXd inputs;
  std::vector<Eigen::MatrixXd> pre_activations;
  std::vector<Eigen::MatrixXd> activations;  // post-ReLU, post-mask
  DropoutMasks masks;
  bool masked = false;
  // Softmax head: logits. Dueling head: advantages (value is recomputable).
  Eigen::MatrixXd head;
};

// A dense ReLU network with either a softmax classifier head or a dueling
// Q head (Q = V + A - mean(A)). All weights and biases live in one flat
// parameter vector so optimizers and checkpoints can treat them uniformly.
//
// Batched calls take inputs as (input_dim x batch) column-major matrices.
class Network {
 public:
  Network(NetworkSpec spec, std::uint64_t seed);

  const NetworkSpec& spec() const { return spec_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t num_parameters() const { return params_.size(); }
  std::span<const double> parameters() const { return params_; }
  std::span<double> mutable_parameters() { return params_; }
  void CopyParametersFrom(const Network& other);

  // Single-input forward. Softmax head returns probabilities, dueling head
  // returns Q-values. kTrain and kMcSample draw fresh masks from the
  // network's own stream; kEval is dropout-free.
  Eigen::VectorXd Forward(std::span<const double> input, Mode mode);

  Eigen::MatrixXd ForwardBatch(const Eigen::MatrixXd& inputs, Mode mode,
                               ForwardCache* cache = nullptr);

  // Dropout-free forward; const so frozen policies can share a network.
  Eigen::MatrixXd Evaluate(const Eigen::MatrixXd& inputs,
                           ForwardCache* cache = nullptr) const;
  Eigen::VectorXd Evaluate(std::span<const double> input) const;

  // Forward with caller-supplied masks (mask columns must match the batch).
  Eigen::MatrixXd ForwardWithMasks(const Eigen::MatrixXd& inputs,
                                   const DropoutMasks& masks,
                                   ForwardCache* cache = nullptr) const;

  DropoutMasks DrawMasks(int batch, Rng& rng) const;

  // Gradient of the loss w.r.t. all parameters, in parameter order.
  // `d_head` is dL/dlogits for the classifier head and dL/dQ for the
  // dueling head, shaped (output_dim x batch).
  std::vector<double> Backward(const ForwardCache& cache,
                               const Eigen::MatrixXd& d_head) const;

  // Width of the representation feeding the head.
  int HiddenWidth() const;

 private:
  struct DenseView {
    std::size_t weight_offset;
    std::size_t bias_offset;
    int rows;
    int cols;
  };

  Eigen::Map<const Eigen::MatrixXd> Weight(const DenseView& v) const;
  Eigen::Map<const Eigen::VectorXd> Bias(const DenseView& v) const;
  Eigen::MatrixXd Run(const Eigen::MatrixXd& inputs, const DropoutMasks* masks,
                      ForwardCache* cache) const;
  void Initialize();

  NetworkSpec spec_;
  std::uint64_t seed_;
  Rng rng_;
  std::vector<double> params_;
  std::vector<DenseView> hidden_;
  // Softmax: heads_[0] is the logit layer. Dueling: heads_[0] is the value
  // stream (1 x h), heads_[1] the advantage stream (|A| x h).
  std::vector<DenseView> heads_;
};

// Row-wise helpers used by losses and policies.
int ArgMaxLowestIndex(const Eigen::Ref<const Eigen::VectorXd>& values);
Eigen::MatrixXd Softmax(const Eigen::MatrixXd& logits);
Eigen::MatrixXd LogSoftmax(const Eigen::MatrixXd& logits);

}  // namespace air::nn

#endif  // AIR_NN_NETWORK_H_
