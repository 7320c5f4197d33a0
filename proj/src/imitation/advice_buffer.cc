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

#include "air/imitation/advice_buffer.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "air/errors.h"

namespace air::imitation {

void AdviceBuffer::Add(envs::Observation state, int action) {
  pairs_.push_back({std::move(state), action});
}

void AdviceBuffer::MarkTrained(std::int64_t t) {
  n_last_ = static_cast<std::int64_t>(pairs_.size());
  t_last_ = t;
}

void WriteAdviceBuffer(const std::filesystem::path& path,
                       const AdviceBuffer& buffer) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  char buf[64];
  for (const AdvicePair& pair : buffer.pairs()) {
    out << pair.action;
    for (double x : pair.state) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
      out << ',' << std::string_view(buf, end - buf);
    }
    out << '\n';
  }
}

std::vector<AdvicePair> ReadAdviceBuffer(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::vector<AdvicePair> pairs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    AdvicePair pair;
    std::stringstream fields(line);
    std::string field;
    bool first = true;
    while (std::getline(fields, field, ',')) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size())
        throw ContractViolation("bad advice record in " + path.string());
      if (first) {
        pair.action = static_cast<int>(v);
        first = false;
      } else {
        pair.state.push_back(v);
      }
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace air::imitation
