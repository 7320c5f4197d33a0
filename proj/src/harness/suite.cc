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

#include "air/harness/suite.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "air/harness/metrics.h"

namespace air::harness {

std::vector<SuiteEntry> ExpandSuite(const RunConfig& base,
                                    const std::vector<advising::StudentMode>& modes,
                                    const std::vector<std::uint64_t>& seeds,
                                    const std::filesystem::path& root) {
  std::vector<SuiteEntry> entries;
  for (advising::StudentMode mode : modes) {
    for (std::uint64_t seed : seeds) {
      SuiteEntry e{base, seed, {}};
      e.config.advising.mode = mode;
      e.out_dir = root / base.env.name / std::string(advising::ModeName(mode)) /
                  ("seed" + std::to_string(seed));
      entries.push_back(std::move(e));
    }
  }
  return entries;
}

std::vector<RunSummary> RunSuite(const std::vector<SuiteEntry>& entries,
                                 int parallelism) {
  std::vector<RunSummary> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      const SuiteEntry& e = entries[i];
      try {
        results[i] = Run(e.config, e.seed, e.out_dir);
      } catch (const std::exception& ex) {
        RunSummary& s = results[i];
        s.env = e.config.env.name;
        s.mode = std::string(advising::ModeName(e.config.advising.mode));
        s.seed = e.seed;
        s.status = std::string("failed: ") + ex.what();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(parallelism,
                                                static_cast<int>(entries.size())));
  if (threads == 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  pool.clear();
  return results;
}

MeanStd ComputeMeanStd(const std::vector<double>& values) {
  MeanStd out;
  out.count = static_cast<int>(values.size());
  if (values.empty()) return out;
  // Shifted by the first value so identical inputs give exactly zero spread.
  const double shift = values.front();
  double sum = 0.0;
  for (double v : values) sum += v - shift;
  const double centred_mean = sum / static_cast<double>(values.size());
  out.mean = shift + centred_mean;
  double sq = 0.0;
  for (double v : values) sq += (v - shift - centred_mean) * (v - shift - centred_mean);
  out.std = std::sqrt(sq / static_cast<double>(values.size()));
  return out;
}

std::vector<AggregateRow> Aggregate(const std::vector<RunSummary>& runs) {
  // Keep first-seen order of (env, mode) so reports follow the mode ladder.
  std::vector<std::pair<std::string, std::string>> order;
  std::map<std::pair<std::string, std::string>, std::vector<const RunSummary*>> groups;
  for (const RunSummary& r : runs) {
    auto key = std::make_pair(r.env, r.mode);
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(&r);
  }
  std::vector<AggregateRow> rows;
  for (const auto& key : order) {
    AggregateRow row;
    row.env = key.first;
    row.mode = key.second;
    std::vector<double> finals, ratios, accs, aucs;
    for (const RunSummary* r : groups[key]) {
      ++row.runs;
      if (!r->ok()) {
        ++row.failures;
        continue;
      }
      finals.push_back(r->final_score);
      ratios.push_back(r->reuse_ratio_pct);
      aucs.push_back(r->auc);
      if (r->reuse_accuracy_pct) accs.push_back(*r->reuse_accuracy_pct);
    }
    row.final_score = ComputeMeanStd(finals);
    row.reuse_ratio_pct = ComputeMeanStd(ratios);
    row.reuse_accuracy_pct = ComputeMeanStd(accs);
    row.auc = ComputeMeanStd(aucs);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string FormatSuiteReport(const std::vector<AggregateRow>& rows) {
  std::ostringstream out;
  out << "env,mode,runs,failures,final_score_mean,final_score_std,"
         "reuse_ratio_pct_mean,reuse_ratio_pct_std,reuse_accuracy_pct_mean,"
         "reuse_accuracy_pct_std,auc_mean,auc_std\n";
  auto cell = [](const MeanStd& m) {
    if (m.count == 0) return std::string(",");
    return FormatDouble(m.mean) + "," + FormatDouble(m.std);
  };
  for (const AggregateRow& r : rows) {
    out << r.env << ',' << r.mode << ',' << r.runs << ',' << r.failures << ','
        << cell(r.final_score) << ',' << cell(r.reuse_ratio_pct) << ','
        << cell(r.reuse_accuracy_pct) << ',' << cell(r.auc) << '\n';
  }
  return out.str();
}

void WriteSuiteReport(const std::filesystem::path& path,
                      const std::vector<AggregateRow>& rows) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << FormatSuiteReport(rows);
}

std::vector<RunSummary> CollectSummaries(
    const std::vector<std::filesystem::path>& dirs) {
  std::vector<std::filesystem::path> files;
  for (const auto& dir : dirs) {
    if (std::filesystem::is_regular_file(dir) && dir.filename() == "summary.json") {
      files.push_back(dir);
      continue;
    }
    if (!std::filesystem::is_directory(dir)) continue;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().filename() == "summary.json")
        files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<RunSummary> out;
  for (const auto& f : files) out.push_back(ReadSummary(f));
  return out;
}

}  // namespace air::harness
