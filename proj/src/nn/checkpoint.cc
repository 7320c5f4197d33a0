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

#include "air/nn/checkpoint.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "air/errors.h"

namespace air::nn {
namespace {

constexpr const char* kMagic = "air-network";
constexpr int kVersion = 1;

void Expect(std::istream& in, const std::string& word) {
  std::string got;
  if (!(in >> got) || got != word)
    throw ContractViolation("checkpoint: expected '" + word + "', got '" +
                            got + "'");
}

template <typename T>
T ReadValue(std::istream& in, const char* what) {
  T v;
  if (!(in >> v))
    throw ContractViolation(std::string("checkpoint: bad ") + what);
  return v;
}

}  // namespace

std::string FormatHexDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::hex);
  if (ec != std::errc()) throw ContractViolation("hexfloat format failed");
  return std::string(buf, end);
}

double ParseHexDouble(const std::string& token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  bool negative = false;
  if (first != last && *first == '-') {
    negative = true;
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::hex);
  if (ec != std::errc() || ptr != last)
    throw ContractViolation("checkpoint: bad hexfloat '" + token + "'");
  return negative ? -v : v;
}

void WriteCheckpoint(std::ostream& out, const Network& net,
                     const std::map<std::string, double>& metadata) {
  const NetworkSpec& spec = net.spec();
  out << kMagic << ' ' << kVersion << '\n';
  out << "input_dim " << spec.input_dim << '\n';
  out << "hidden_layers " << spec.hidden_layers.size();
  for (int h : spec.hidden_layers) out << ' ' << h;
  out << '\n';
  out << "output_dim " << spec.output_dim << '\n';
  out << "dropout_rate " << FormatHexDouble(spec.dropout_rate) << '\n';
  out << "head_kind " << HeadKindName(spec.head_kind) << '\n';
  out << "seed " << net.seed() << '\n';
  for (const auto& [key, value] : metadata)
    out << "meta " << key << ' ' << FormatHexDouble(value) << '\n';
  out << "parameters " << net.num_parameters() << '\n';
  for (double p : net.parameters()) out << FormatHexDouble(p) << '\n';
}

Checkpoint ReadCheckpoint(std::istream& in) {
  Expect(in, kMagic);
  if (ReadValue<int>(in, "version") != kVersion)
    throw ContractViolation("checkpoint: unsupported version");
  NetworkSpec spec;
  Expect(in, "input_dim");
  spec.input_dim = ReadValue<int>(in, "input_dim");
  Expect(in, "hidden_layers");
  const auto layers = ReadValue<std::size_t>(in, "hidden layer count");
  for (std::size_t i = 0; i < layers; ++i)
    spec.hidden_layers.push_back(ReadValue<int>(in, "hidden width"));
  Expect(in, "output_dim");
  spec.output_dim = ReadValue<int>(in, "output_dim");
  Expect(in, "dropout_rate");
  spec.dropout_rate = ParseHexDouble(ReadValue<std::string>(in, "dropout"));
  Expect(in, "head_kind");
  spec.head_kind = ParseHeadKind(ReadValue<std::string>(in, "head_kind"));
  Expect(in, "seed");
  const auto seed = ReadValue<std::uint64_t>(in, "seed");

  std::map<std::string, double> metadata;
  std::string word;
  while ((in >> word) && word == "meta") {
    auto key = ReadValue<std::string>(in, "meta key");
    metadata[key] = ParseHexDouble(ReadValue<std::string>(in, "meta value"));
  }
  if (word != "parameters")
    throw ContractViolation("checkpoint: expected 'parameters'");
  Network net(spec, seed);
  if (ReadValue<std::size_t>(in, "parameter count") != net.num_parameters())
    throw ContractViolation("checkpoint: parameter count does not match spec");
  auto params = net.mutable_parameters();
  for (double& p : params)
    p = ParseHexDouble(ReadValue<std::string>(in, "parameter"));
  return {std::move(net), std::move(metadata)};
}

void SaveCheckpoint(const std::filesystem::path& path, const Network& net,
                    const std::map<std::string, double>& metadata) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  WriteCheckpoint(out, net, metadata);
}

Checkpoint LoadCheckpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return ReadCheckpoint(in);
}

}  // namespace air::nn
