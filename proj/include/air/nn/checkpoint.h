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

#ifndef AIR_NN_CHECKPOINT_H_
#define AIR_NN_CHECKPOINT_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "air/nn/network.h"

namespace air::nn {

// Flat text layout, one token group per line:
//
//   air-network 1
//   input_dim <int>
//   hidden_layers <count> <w1> ... <wk>
//   output_dim <int>
//   dropout_rate <hexfloat>
//   head_kind <q_dueling|softmax_classifier>
//   seed <uint64>
//   meta <key> <hexfloat>        (zero or more)
//   parameters <count>
//   <hexfloat>                   (one per parameter, declaration order)
//
// Hex floats make the round trip bitwise.
struct Checkpoint {
  Network network;
  std::map<std::string, double> metadata;
};

void WriteCheckpoint(std::ostream& out, const Network& net,
                     const std::map<std::string, double>& metadata = {});
Checkpoint ReadCheckpoint(std::istream& in);

void SaveCheckpoint(const std::filesystem::path& path, const Network& net,
                    const std::map<std::string, double>& metadata = {});
Checkpoint LoadCheckpoint(const std::filesystem::path& path);

std::string FormatHexDouble(double value);
double ParseHexDouble(const std::string& token);

}  // namespace air::nn

#endif  // AIR_NN_CHECKPOINT_H_
