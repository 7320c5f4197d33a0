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


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "air/advising/student_mode.h"
#include "air/envs/registry.h"
#include "air/errors.h"
#include "air/harness/config.h"
#include "air/harness/diversity.h"
#include "air/harness/metrics.h"
#include "air/harness/runner.h"
#include "air/harness/suite.h"
#include "air/imitation/advice_buffer.h"

namespace air::harness {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("air_harness_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// A few-second keydoor session with every mechanism switched on.
RunConfig TinyConfig(advising::StudentMode mode) {
  RunConfig c = DefaultRunConfig(0.001);  // 5000 steps
  c.env.name = "keydoor";
  c.advising.mode = mode;
  c.eval_period = 500;
  c.eval_episodes = 2;
  c.dqn.hidden_layers = {16};
  c.dqn.learning_rate = 1e-3;
  c.advising.imitation.hidden_layers = {16};
  c.advising.imitation.mc_passes = 10;
  c.advising.imitation.learning_rate = 1e-3;
  c.teacher.noise = 0.1;
  return c;
}

ConfigError ParseError(const std::string& text) {
  try {
    ParseRunConfig(json::parse(text));
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected a config error for " << text);
  return ConfigError("", "");
}

}  // namespace

TEST_CASE("desk profile keeps the full-scale proportions") {
  const RunConfig c = DefaultRunConfig();
  CHECK(c.total_steps == 200000);
  CHECK(c.budget * 200 == c.total_steps);
  CHECK(c.dqn.epsilon.decay_steps * 10 == c.total_steps);
  CHECK(c.advising.schedule.decay_start * 10 == c.total_steps);
  CHECK(c.advising.schedule.decay_end * 10 == c.total_steps * 4);
  CHECK(c.advising.trigger.k_init == 8000);
  CHECK(c.advising.trigger.n_min == 100);
  const RunConfig full = DefaultRunConfig(1.0);
  CHECK(full.total_steps == 5000000);
  CHECK(full.budget == 25000);
  CHECK(full.dqn.replay_capacity == 500000);
  CHECK(full.dqn.target_update_period == 7500);
}

TEST_CASE("config parsing rejects unknown keys by name") {
  CHECK(ParseError(R"({"dqn": {"learnin_rate": 0.1}})").key() == "dqn.learnin_rate");
  CHECK(ParseError(R"({"budgt": 3})").key() == "budgt");
  CHECK(ParseError(R"({"budget": "many"})").key() == "budget");
  CHECK(ParseError(R"({"mode": "XYZ"})").key() == "mode");
  CHECK(ParseError(R"({"env": {"name": "pong"}})").key() == "env.name");
  CHECK(ParseError(R"({"imitation": {"percentile": 0}})").key() == "imitation.percentile");
  CHECK(ParseError(R"({"teacher": {"kind": "dqn_snapshot"}})").key() == "teacher.checkpoint");
}

TEST_CASE("config survives a JSON round trip") {
  RunConfig c = TinyConfig(advising::StudentMode::kARAE);
  c.seeds = {4, 5};
  c.advising.manual_tau = 0.02;
  const json first = ToJson(c);
  CHECK(ToJson(ParseRunConfig(first)) == first);
}

TEST_CASE("metrics rows round trip and truncated rows are dropped") {
  MetricsRecord r;
  r.kind = RecordKind::kEval;
  r.step = 2000;
  r.eval_score = 0.1 + 0.2;
  r.reuse_count_window = 7;
  r.collection_count_window = 3;
  r.tau_current = 1.0 / 3.0;
  r.budget_remaining = 12;
  const std::string line = FormatRecord(r);
  const auto back = ParseRecord(line);
  REQUIRE(back.has_value());
  CHECK(FormatRecord(*back) == line);
  CHECK(*back->eval_score == 0.1 + 0.2);
  CHECK_FALSE(back->reuse_accuracy_running.has_value());
  CHECK_FALSE(ParseRecord(line.substr(0, line.size() / 2)).has_value());
  CHECK_FALSE(ParseRecord("bogus,1,,0,0,,0,").has_value());

  const fs::path dir = TempDir("metrics");
  {
    MetricsWriter w(dir / "metrics.csv");
    w.Append(r);
    w.Append(r);
  }
  {
    std::ofstream append(dir / "metrics.csv", std::ios::app);
    append << "window,2100,,1";  // killed mid-row
  }
  CHECK(ReadMetrics(dir / "metrics.csv").size() == 2);
}

TEST_CASE("run writes consistent records and summary") {
  const fs::path dir = TempDir("run");
  const RunConfig c = TinyConfig(advising::StudentMode::kAIR);
  const RunSummary s = Run(c, 1, dir);
  REQUIRE(s.ok());
  const auto rows = ReadMetrics(dir / "metrics.csv");
  std::int64_t evals = 0, windows = 0, reused = 0, collected = 0;
  for (const auto& r : rows) {
    if (r.kind == RecordKind::kEval) {
      ++evals;
      CHECK(r.eval_score.has_value());
    } else {
      ++windows;
      reused += r.reuse_count_window;
      collected += r.collection_count_window;
    }
    CHECK(r.budget_remaining >= 0);
  }
  CHECK(evals == c.total_steps / c.eval_period);
  CHECK(evals == s.eval_records);
  CHECK(windows == c.total_steps / c.diagnostic_window);
  CHECK(reused == s.total_reused);
  CHECK(collected == s.total_collected);
  CHECK(s.reuse_ratio_pct == 100.0 * s.total_reused / s.total_steps);
  CHECK(s.metered_queries + s.budget_remaining == c.budget);
  CHECK(s.shadow_queries == s.total_reused);
  CHECK(s.advice_buffer_size == s.total_collected);
  if (s.total_reused > 0)
    CHECK(*s.reuse_accuracy_pct == 100.0 * s.reuse_hits / s.total_reused);

  const RunSummary back = ReadSummary(dir / "summary.json");
  CHECK(ToJson(back) == ToJson(s));
  CHECK(imitation::ReadAdviceBuffer(dir / "advice.csv").size() ==
        static_cast<std::size_t>(s.advice_buffer_size));
  CHECK(ToJson(LoadRunConfig(dir / "config.json")) ["mode"] == "AIR");
}

TEST_CASE("identical seeds give identical metrics bytes") {
  const RunConfig c = TinyConfig(advising::StudentMode::kARAE);
  const fs::path a = TempDir("repro_a"), b = TempDir("repro_b");
  Run(c, 7, a);
  Run(c, 7, b);
  CHECK(Slurp(a / "metrics.csv") == Slurp(b / "metrics.csv"));
  CHECK(Slurp(a / "summary.json") == Slurp(b / "summary.json"));
}

TEST_CASE("divergence marks the run failed and keeps partial metrics") {
  RunConfig c = TinyConfig(advising::StudentMode::kNA);
  c.dqn.learning_rate = 1e300;
  const fs::path dir = TempDir("diverge");
  const RunSummary s = Run(c, 1, dir);
  CHECK_FALSE(s.ok());
  CHECK(s.status.rfind("failed: ", 0) == 0);
  CHECK(fs::exists(dir / "metrics.csv"));
  CHECK(ReadSummary(dir / "summary.json").status == s.status);
}

TEST_CASE("evaluation leaves the student, replay and budget untouched") {
  RunConfig c = TinyConfig(advising::StudentMode::kEA);
  auto env = envs::MakeEnvironment(c.env, 1);
  auto eval_env = envs::MakeEnvironment(c.env, 2);
  student::DqnAgent agent(env->spec().observation_dim, env->spec().action_count, c.dqn, 3);
  envs::Observation s = env->Reset();
  for (int i = 0; i < 50; ++i) {
    envs::Transition tr = env->Step(agent.SelfAction(s, true));
    const bool done = tr.terminal || tr.truncated;
    s = done ? env->Reset() : tr.next_state;
    agent.ObserveAndUpdate(std::move(tr));
  }
  const auto params = std::vector<double>(agent.online_net().parameters().begin(),
                                          agent.online_net().parameters().end());
  const auto steps = agent.step_count();
  const auto stored = agent.replay().total_added();
  const double first = EvaluateGreedy(agent, *eval_env, 3);
  CHECK(EvaluateGreedy(agent, *eval_env, 3) == first);
  CHECK(agent.step_count() == steps);
  CHECK(agent.replay().total_added() == stored);
  CHECK(std::equal(params.begin(), params.end(), agent.online_net().parameters().begin()));
}

TEST_CASE("mean and std over seeds") {
  const MeanStd same = ComputeMeanStd({0.7, 0.7, 0.7});
  CHECK(same.mean == 0.7);
  CHECK(same.std == 0.0);
  CHECK(ComputeMeanStd({5.0}).std == 0.0);
  const MeanStd spread = ComputeMeanStd({1.0, 3.0});
  CHECK(spread.mean == 2.0);
  CHECK(spread.std == 1.0);
}

TEST_CASE("aggregate groups runs by env and mode") {
  RunSummary a, b, c;
  a.env = b.env = c.env = "keydoor";
  a.mode = b.mode = "AIR";
  c.mode = "NA";
  a.final_score = 0.5, b.final_score = 0.7, c.final_score = 0.1;
  a.reuse_accuracy_pct = 80.0;
  b.status = "ok";
  c.status = "failed: boom";
  const auto rows = Aggregate({a, b, c});
  REQUIRE(rows.size() == 2);
  const auto& air = rows[0].mode == "AIR" ? rows[0] : rows[1];
  CHECK(air.runs == 2);
  CHECK(air.final_score.mean == doctest::Approx(0.6));
  CHECK(air.reuse_accuracy_pct.count == 1);
  const auto& na = rows[0].mode == "NA" ? rows[0] : rows[1];
  CHECK(na.failures == 1);
  CHECK(FormatSuiteReport(rows).find("keydoor,AIR,2,0,") != std::string::npos);
}

TEST_CASE("suite runs each cell and isolates failures") {
  RunConfig base = TinyConfig(advising::StudentMode::kNA);
  base.total_steps = 1000;
  base.eval_period = 500;
  const fs::path root = TempDir("suite");
  auto entries = ExpandSuite(base, {advising::StudentMode::kNA, advising::StudentMode::kEA},
                             {1, 2}, root);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].out_dir == root / "keydoor" / "NA" / "seed1");
  entries[3].config.dqn.learning_rate = 1e300;
  const auto results = RunSuite(entries, 2);
  REQUIRE(results.size() == 4);
  CHECK(results[0].ok());
  CHECK(results[1].ok());
  CHECK(results[2].ok());
  CHECK_FALSE(results[3].ok());
  CHECK(CollectSummaries({root}).size() == 4);
}

TEST_CASE("diversity of identical, disjoint and empty buffers") {
  const LabeledBuffer a{"a", {{1, 0}, {0, 1}, {1, 1}}};
  const LabeledBuffer b{"b", {{1, 0}, {0, 1}, {1, 1}}};
  const LabeledBuffer empty{"e", {}};
  const PairCoverage same = CompareBuffers(a, b);
  CHECK(same.both == 3);
  CHECK(same.only_a == 0);
  CHECK(same.only_b == 0);
  const PairCoverage none = CompareBuffers(empty, a);
  CHECK(none.only_a == 0);
  CHECK(none.only_b == 3);
  CHECK(none.both == 0);

  const BufferCoverage cov = MeasureBuffer({"d", {{0, 0}, {3, 4}, {0, 0}}});
  CHECK(cov.pairs == 3);
  CHECK(cov.unique_states == 2);
  CHECK(cov.mean_pairwise_distance == 5.0);
  CHECK(ComputeDiversity({a, b, empty}).pairs.size() == 3);
}

TEST_CASE("diversity reports runs without a buffer dump") {
  const fs::path root = TempDir("diversity");
  RunConfig c = TinyConfig(advising::StudentMode::kNA);
  c.total_steps = 500;
  Run(c, 1, root / "na");
  c.advising.mode = advising::StudentMode::kEA;
  c.advising.record_advice = true;
  Run(c, 1, root / "ea");
  const DiversityReport report = DiversityFromRunDirs({root / "na", root / "ea"});
  REQUIRE(report.missing.size() == 1);
  REQUIRE(report.buffers.size() == 1);
  CHECK(report.buffers[0].label == "EA/seed1");
  CHECK(report.buffers[0].pairs == static_cast<std::size_t>(c.budget));
  CHECK_FALSE(FormatDiversityReport(report).empty());
}

}  // namespace air::harness
