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

#include "air/harness/diversity.h"

#include <cmath>
#include <set>
#include <sstream>

#include "air/harness/metrics.h"
#include "air/harness/runner.h"
#include "air/imitation/advice_buffer.h"

namespace air::harness {
namespace {

std::set<envs::Observation> UniqueStates(const LabeledBuffer& buffer) {
  return {buffer.states.begin(), buffer.states.end()};
}

}  // namespace

PairCoverage CompareBuffers(const LabeledBuffer& a, const LabeledBuffer& b) {
  const auto sa = UniqueStates(a);
  const auto sb = UniqueStates(b);
  PairCoverage out{a.label, b.label};
  for (const auto& s : sa) (sb.count(s) ? out.both : out.only_a)++;
  for (const auto& s : sb)
    if (!sa.count(s)) ++out.only_b;
  return out;
}

BufferCoverage MeasureBuffer(const LabeledBuffer& buffer) {
  const auto unique = UniqueStates(buffer);
  BufferCoverage out{buffer.label, buffer.states.size(), unique.size(), 0.0};
  const std::vector<envs::Observation> states(unique.begin(), unique.end());
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      double sq = 0.0;
      for (std::size_t k = 0; k < states[i].size(); ++k) {
        const double d = states[i][k] - states[j][k];
        sq += d * d;
      }
      total += std::sqrt(sq);
      ++count;
    }
  }
  if (count > 0) out.mean_pairwise_distance = total / static_cast<double>(count);
  return out;
}

DiversityReport ComputeDiversity(const std::vector<LabeledBuffer>& buffers) {
  DiversityReport report;
  for (const auto& b : buffers) report.buffers.push_back(MeasureBuffer(b));
  for (std::size_t i = 0; i < buffers.size(); ++i)
    for (std::size_t j = i + 1; j < buffers.size(); ++j)
      report.pairs.push_back(CompareBuffers(buffers[i], buffers[j]));
  return report;
}

DiversityReport DiversityFromRunDirs(
    const std::vector<std::filesystem::path>& run_dirs) {
  std::vector<LabeledBuffer> buffers;
  std::vector<std::string> missing;
  for (const auto& dir : run_dirs) {
    std::string label = dir.string();
    if (std::filesystem::exists(dir / "summary.json")) {
      const RunSummary s = ReadSummary(dir / "summary.json");
      label = s.mode + "/seed" + std::to_string(s.seed);
    }
    if (!std::filesystem::exists(dir / "advice.csv")) {
      missing.push_back(label);
      continue;
    }
    LabeledBuffer buffer{label, {}};
    for (auto& pair : imitation::ReadAdviceBuffer(dir / "advice.csv"))
      buffer.states.push_back(std::move(pair.state));
    buffers.push_back(std::move(buffer));
  }
  DiversityReport report = ComputeDiversity(buffers);
  report.missing = std::move(missing);
  return report;
}

std::string FormatDiversityReport(const DiversityReport& report) {
  std::ostringstream out;
  out << "buffer,pairs,unique_states,mean_pairwise_distance\n";
  for (const auto& b : report.buffers)
    out << b.label << ',' << b.pairs << ',' << b.unique_states << ','
        << FormatDouble(b.mean_pairwise_distance) << '\n';
  out << "\na,b,only_a,only_b,both\n";
  for (const auto& p : report.pairs)
    out << p.a << ',' << p.b << ',' << p.only_a << ',' << p.only_b << ','
        << p.both << '\n';
  for (const auto& m : report.missing) out << "\nmissing advice dump: " << m;
  if (!report.missing.empty()) out << '\n';
  return out.str();
}

}  // namespace air::harness
