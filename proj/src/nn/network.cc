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

#include "air/nn/network.h"

#include <cmath>
#include <string>

#include "air/errors.h"

namespace air::nn {

std::string_view HeadKindName(HeadKind kind) {
  return kind == HeadKind::kQDueling ? "q_dueling" : "softmax_classifier";
}

HeadKind ParseHeadKind(std::string_view name) {
  if (name == "q_dueling") return HeadKind::kQDueling;
  if (name == "softmax_classifier") return HeadKind::kSoftmaxClassifier;
  throw ContractViolation("unknown head kind '" + std::string(name) + "'");
}

void NetworkSpec::Validate() const {
  AIR_CHECK(input_dim > 0, "input_dim must be positive");
  AIR_CHECK(output_dim >= 2, "output_dim must be at least 2");
  for (int h : hidden_layers) AIR_CHECK(h > 0, "hidden widths must be positive");
  AIR_CHECK(dropout_rate >= 0.0 && dropout_rate <= 1.0,
            "dropout_rate must lie in [0, 1]");
}

std::size_t NetworkSpec::ParameterCount() const {
  std::size_t count = 0;
  int fan_in = input_dim;
  for (int h : hidden_layers) {
    count += static_cast<std::size_t>(h) * (fan_in + 1);
    fan_in = h;
  }
  count += static_cast<std::size_t>(output_dim) * (fan_in + 1);
  if (head_kind == HeadKind::kQDueling) count += fan_in + 1;
  return count;
}

Network::Network(NetworkSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), seed_(seed), rng_(seed) {
  spec_.Validate();
  std::size_t offset = 0;
  auto add = [&offset](int rows, int cols) {
    DenseView v{offset, offset + static_cast<std::size_t>(rows) * cols, rows,
                cols};
    offset = v.bias_offset + rows;
    return v;
  };
  int fan_in = spec_.input_dim;
  for (int h : spec_.hidden_layers) {
    hidden_.push_back(add(h, fan_in));
    fan_in = h;
  }
  if (spec_.head_kind == HeadKind::kQDueling) {
    heads_.push_back(add(1, fan_in));
    heads_.push_back(add(spec_.output_dim, fan_in));
  } else {
    heads_.push_back(add(spec_.output_dim, fan_in));
  }
  params_.assign(offset, 0.0);
  Initialize();
}

void Network::Initialize() {
  // Fan-in scaled uniform weights, zero biases. Initialization draws from a
  // stream separate from the dropout stream so masks do not depend on size.
  Rng init_rng(DeriveSeed(seed_, "init"));
  auto fill = [&](const DenseView& v) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(v.cols));
    for (std::size_t i = 0; i < static_cast<std::size_t>(v.rows) * v.cols; ++i)
      params_[v.weight_offset + i] = (2.0 * UniformUnit(init_rng) - 1.0) * bound;
  };
  for (const auto& v : hidden_) fill(v);
  for (const auto& v : heads_) fill(v);
}

void Network::CopyParametersFrom(const Network& other) {
  AIR_CHECK(other.spec_ == spec_, "parameter copy between different specs");
  params_ = other.params_;
}

int Network::HiddenWidth() const {
  return spec_.hidden_layers.empty() ? spec_.input_dim
                                     : spec_.hidden_layers.back();
}

Eigen::Map<const Eigen::MatrixXd> Network::Weight(const DenseView& v) const {
  return {params_.data() + v.weight_offset, v.rows, v.cols};
}

Eigen::Map<const Eigen::VectorXd> Network::Bias(const DenseView& v) const {
  return {params_.data() + v.bias_offset, v.rows};
}

DropoutMasks Network::DrawMasks(int batch, Rng& rng) const {
  DropoutMasks masks;
  const double p = spec_.dropout_rate;
  const double scale = p < 1.0 ? 1.0 / (1.0 - p) : 0.0;
  for (int width : spec_.hidden_layers) {
    Eigen::ArrayXXd m(width, batch);
    for (int c = 0; c < batch; ++c)
      for (int r = 0; r < width; ++r)
        m(r, c) = UniformUnit(rng) >= p ? scale : 0.0;
    masks.layers.push_back(std::move(m));
  }
  return masks;
}

Eigen::MatrixXd Network::Run(const Eigen::MatrixXd& inputs,
                             const DropoutMasks* masks,
                             ForwardCache* cache) const {
  AIR_CHECK(inputs.rows() == spec_.input_dim,
            "input length " + std::to_string(inputs.rows()) +
                " does not match input_dim " + std::to_string(spec_.input_dim));
  const Eigen::Index batch = inputs.cols();
  if (masks != nullptr) {
    AIR_CHECK(masks->layers.size() == hidden_.size(), "mask layer count");
    for (std::size_t l = 0; l < hidden_.size(); ++l)
      AIR_CHECK(masks->layers[l].cols() == batch &&
                    masks->layers[l].rows() == hidden_[l].rows,
                "mask shape does not match batch");
  }
  if (cache != nullptr) {
    cache->inputs = inputs;
    cache->pre_activations.clear();
    cache->activations.clear();
    cache->masked = masks != nullptr;
    cache->masks = masks != nullptr ? *masks : DropoutMasks{};
  }

  Eigen::MatrixXd h = inputs;
  for (std::size_t l = 0; l < hidden_.size(); ++l) {
    Eigen::MatrixXd z = Weight(hidden_[l]) * h;
    z.colwise() += Bias(hidden_[l]);
    Eigen::MatrixXd a = z.cwiseMax(0.0);
    if (masks != nullptr) a.array() *= masks->layers[l];
    if (cache != nullptr) {
      cache->pre_activations.push_back(std::move(z));
      cache->activations.push_back(a);
    }
    h = std::move(a);
  }

  if (spec_.head_kind == HeadKind::kSoftmaxClassifier) {
    Eigen::MatrixXd logits = Weight(heads_[0]) * h;
    logits.colwise() += Bias(heads_[0]);
    Eigen::MatrixXd probs = Softmax(logits);
    if (cache != nullptr) cache->head = std::move(logits);
    return probs;
  }

  Eigen::RowVectorXd value = Weight(heads_[0]) * h;
  value.array() += Bias(heads_[0])(0);
  Eigen::MatrixXd adv = Weight(heads_[1]) * h;
  adv.colwise() += Bias(heads_[1]);
  const Eigen::RowVectorXd adv_mean = adv.colwise().mean();
  Eigen::MatrixXd q = adv;
  q.rowwise() += value - adv_mean;
  if (cache != nullptr) cache->head = std::move(adv);
  return q;
}

Eigen::MatrixXd Network::ForwardBatch(const Eigen::MatrixXd& inputs, Mode mode,
                                      ForwardCache* cache) {
  if (mode == Mode::kEval || spec_.dropout_rate == 0.0 || hidden_.empty())
    return Run(inputs, nullptr, cache);
  const DropoutMasks masks = DrawMasks(static_cast<int>(inputs.cols()), rng_);
  return Run(inputs, &masks, cache);
}

Eigen::VectorXd Network::Forward(std::span<const double> input, Mode mode) {
  Eigen::Map<const Eigen::MatrixXd> x(input.data(),
                                      static_cast<Eigen::Index>(input.size()), 1);
  return ForwardBatch(x, mode).col(0);
}

Eigen::MatrixXd Network::Evaluate(const Eigen::MatrixXd& inputs,
                                  ForwardCache* cache) const {
  return Run(inputs, nullptr, cache);
}

Eigen::VectorXd Network::Evaluate(std::span<const double> input) const {
  Eigen::Map<const Eigen::MatrixXd> x(input.data(),
                                      static_cast<Eigen::Index>(input.size()), 1);
  return Run(x, nullptr, nullptr).col(0);
}

Eigen::MatrixXd Network::ForwardWithMasks(const Eigen::MatrixXd& inputs,
                                          const DropoutMasks& masks,
                                          ForwardCache* cache) const {
  return Run(inputs, &masks, cache);
}

std::vector<double> Network::Backward(const ForwardCache& cache,
                                      const Eigen::MatrixXd& d_head) const {
  const Eigen::Index batch = cache.inputs.cols();
  AIR_CHECK(d_head.rows() == spec_.output_dim && d_head.cols() == batch,
            "head gradient shape mismatch");
  std::vector<double> grads(params_.size(), 0.0);
  auto write = [&grads](const DenseView& v, const Eigen::MatrixXd& dw,
                        const Eigen::VectorXd& db) {
    Eigen::Map<Eigen::MatrixXd>(grads.data() + v.weight_offset, v.rows,
                                v.cols) = dw;
    Eigen::Map<Eigen::VectorXd>(grads.data() + v.bias_offset, v.rows) = db;
  };

  const Eigen::MatrixXd& h_last =
      hidden_.empty() ? cache.inputs : cache.activations.back();
  Eigen::MatrixXd dh;
  if (spec_.head_kind == HeadKind::kSoftmaxClassifier) {
    write(heads_[0], d_head * h_last.transpose(), d_head.rowwise().sum());
    dh = Weight(heads_[0]).transpose() * d_head;
  } else {
    const Eigen::RowVectorXd d_value = d_head.colwise().sum();
    Eigen::MatrixXd d_adv = d_head;
    d_adv.rowwise() -= d_head.colwise().mean();
    write(heads_[0], d_value * h_last.transpose(),
          Eigen::VectorXd::Constant(1, d_value.sum()));
    write(heads_[1], d_adv * h_last.transpose(), d_adv.rowwise().sum());
    dh = Weight(heads_[0]).transpose() * d_value +
         Weight(heads_[1]).transpose() * d_adv;
  }

  for (std::size_t l = hidden_.size(); l-- > 0;) {
    Eigen::MatrixXd dz = dh;
    if (cache.masked) dz.array() *= cache.masks.layers[l];
    dz.array() *= (cache.pre_activations[l].array() > 0.0).cast<double>();
    const Eigen::MatrixXd& prev =
        l == 0 ? cache.inputs : cache.activations[l - 1];
    write(hidden_[l], dz * prev.transpose(), dz.rowwise().sum());
    if (l > 0) dh = Weight(hidden_[l]).transpose() * dz;
  }
  return grads;
}

int ArgMaxLowestIndex(const Eigen::Ref<const Eigen::VectorXd>& values) {
  int best = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i)
    if (values(i) > values(best)) best = static_cast<int>(i);
  return best;
}

Eigen::MatrixXd LogSoftmax(const Eigen::MatrixXd& logits) {
  Eigen::MatrixXd out = logits;
  for (Eigen::Index c = 0; c < out.cols(); ++c) {
    const double m = out.col(c).maxCoeff();
    const double lse = m + std::log((out.col(c).array() - m).exp().sum());
    out.col(c).array() -= lse;
  }
  return out;
}

Eigen::MatrixXd Softmax(const Eigen::MatrixXd& logits) {
  Eigen::MatrixXd out(logits.rows(), logits.cols());
  for (Eigen::Index c = 0; c < logits.cols(); ++c) {
    const double m = logits.col(c).maxCoeff();
    Eigen::ArrayXd e = (logits.col(c).array() - m).exp();
    out.col(c) = (e / e.sum()).matrix();
  }
  return out;
}

}  // namespace air::nn
