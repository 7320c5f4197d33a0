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

#ifndef AIR_HARNESS_DIVERSITY_H_
#define AIR_HARNESS_DIVERSITY_H_

#include <filesystem>
#include <string>
#include <vector>

#include "air/envs/environment.h"

namespace air::harness {

struct LabeledBuffer {
  std::string label;
  std::vector<envs::Observation> states;
};

struct BufferCoverage {
  std::string label;
  std::size_t pairs = 0;
  std::size_t unique_states = 0;
  // Mean Euclidean distance over all pairs of distinct unique states.
  double mean_pairwise_distance = 0.0;
};

// Exact-state set comparison of two advice buffers.
struct PairCoverage {
  std::string a;
  std::string b;
  std::size_t only_a = 0;
  std::size_t only_b = 0;
  std::size_t both = 0;
};

struct DiversityReport {
  std::vector<BufferCoverage> buffers;
  std::vector<PairCoverage> pairs;  // every unordered pair, in input order
  std::vector<std::string> missing;
};

PairCoverage CompareBuffers(const LabeledBuffer& a, const LabeledBuffer& b);
BufferCoverage MeasureBuffer(const LabeledBuffer& buffer);
DiversityReport ComputeDiversity(const std::vector<LabeledBuffer>& buffers);

// Loads advice.csv from each run directory (labelled "<mode>/seed<k>" from
// its summary). Directories without a dump are listed in `missing`.
DiversityReport DiversityFromRunDirs(
    const std::vector<std::filesystem::path>& run_dirs);

std::string FormatDiversityReport(const DiversityReport& report);

}  // namespace air::harness

#endif  // AIR_HARNESS_DIVERSITY_H_
