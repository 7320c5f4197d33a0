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

#include "air/harness/metrics.h"

#include <charconv>
#include <limits>
#include <sstream>

#include "air/errors.h"

namespace air::harness {
namespace {

std::string Optional(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string();
}

template <typename T>
bool ParseNumber(const std::string& field, T& out) {
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool ParseOptional(const std::string& field, std::optional<double>& out) {
  if (field.empty()) {
    out.reset();
    return true;
  }
  double v;
  if (field == "inf") {
    v = std::numeric_limits<double>::infinity();
  } else if (!ParseNumber(field, v)) {
    return false;
  }
  out = v;
  return true;
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string FormatRecord(const MetricsRecord& r) {
  std::ostringstream line;
  line << (r.kind == RecordKind::kEval ? "eval" : "window") << ',' << r.step
       << ',' << Optional(r.eval_score) << ',' << r.reuse_count_window << ','
       << r.collection_count_window << ',' << Optional(r.tau_current) << ','
       << r.budget_remaining << ',' << Optional(r.reuse_accuracy_running);
  return line.str();
}

std::optional<MetricsRecord> ParseRecord(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  if (fields.size() != 8) return std::nullopt;
  MetricsRecord r;
  if (fields[0] == "eval")
    r.kind = RecordKind::kEval;
  else if (fields[0] == "window")
    r.kind = RecordKind::kWindow;
  else
    return std::nullopt;
  if (!ParseNumber(fields[1], r.step) || !ParseOptional(fields[2], r.eval_score) ||
      !ParseNumber(fields[3], r.reuse_count_window) ||
      !ParseNumber(fields[4], r.collection_count_window) ||
      !ParseOptional(fields[5], r.tau_current) ||
      !ParseNumber(fields[6], r.budget_remaining) ||
      !ParseOptional(fields[7], r.reuse_accuracy_running))
    return std::nullopt;
  return r;
}

MetricsWriter::MetricsWriter(const std::filesystem::path& path) : out_(path) {
  if (!out_) throw std::runtime_error("cannot write " + path.string());
  out_ << kMetricsHeader << '\n' << std::flush;
}

void MetricsWriter::Append(const MetricsRecord& record) {
  out_ << FormatRecord(record) << '\n' << std::flush;
}

std::vector<MetricsRecord> ReadMetrics(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::vector<MetricsRecord> records;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    // A line without its newline is an interrupted write.
    if (in.eof()) break;
    if (auto r = ParseRecord(line)) records.push_back(*r);
  }
  return records;
}

}  // namespace air::harness
