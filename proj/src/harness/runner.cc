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

#include "air/harness/runner.h"

#include <fstream>

#include "air/advising/episode.h"
#include "air/advising/instrumentation.h"
#include "air/advising/orchestrator.h"
#include "air/envs/registry.h"
#include "air/errors.h"
#include "air/harness/metrics.h"
#include "air/imitation/advice_buffer.h"
#include "air/nn/checkpoint.h"
#include "air/random.h"

namespace air::harness {
namespace {

using nlohmann::json;

json OptionalJson(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<double> OptionalFromJson(const json& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  return doc.at(key).get<double>();
}

void WriteJson(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

}  // namespace

RunSeeds RunSeeds::From(std::uint64_t master) {
  return {DeriveSeed(master, "env"), DeriveSeed(master, "eval-env"),
          DeriveSeed(master, "student"), DeriveSeed(master, "advising")};
}

json ToJson(const RunSummary& s) {
  return json{{"env", s.env},
              {"mode", s.mode},
              {"seed", s.seed},
              {"status", s.status},
              {"total_steps", s.total_steps},
              {"eval_records", s.eval_records},
              {"final_score", s.final_score},
              {"auc", s.auc},
              {"reuse_ratio_pct", s.reuse_ratio_pct},
              {"reuse_accuracy_pct", OptionalJson(s.reuse_accuracy_pct)},
              {"total_collected", s.total_collected},
              {"total_reused", s.total_reused},
              {"reuse_hits", s.reuse_hits},
              {"metered_queries", s.metered_queries},
              {"shadow_queries", s.shadow_queries},
              {"budget_remaining", s.budget_remaining},
              {"imitation_events", s.imitation_events},
              {"final_tau", OptionalJson(s.final_tau)},
              {"advice_buffer_size", s.advice_buffer_size}};
}

RunSummary SummaryFromJson(const json& d) {
  RunSummary s;
  s.env = d.at("env").get<std::string>();
  s.mode = d.at("mode").get<std::string>();
  s.seed = d.at("seed").get<std::uint64_t>();
  s.status = d.at("status").get<std::string>();
  s.total_steps = d.at("total_steps").get<std::int64_t>();
  s.eval_records = d.at("eval_records").get<std::int64_t>();
  s.final_score = d.at("final_score").get<double>();
  s.auc = d.at("auc").get<double>();
  s.reuse_ratio_pct = d.at("reuse_ratio_pct").get<double>();
  s.reuse_accuracy_pct = OptionalFromJson(d, "reuse_accuracy_pct");
  s.total_collected = d.at("total_collected").get<std::int64_t>();
  s.total_reused = d.at("total_reused").get<std::int64_t>();
  s.reuse_hits = d.at("reuse_hits").get<std::int64_t>();
  s.metered_queries = d.at("metered_queries").get<std::int64_t>();
  s.shadow_queries = d.at("shadow_queries").get<std::int64_t>();
  s.budget_remaining = d.at("budget_remaining").get<std::int64_t>();
  s.imitation_events = d.at("imitation_events").get<std::int64_t>();
  s.final_tau = OptionalFromJson(d, "final_tau");
  s.advice_buffer_size = d.at("advice_buffer_size").get<std::int64_t>();
  return s;
}

RunSummary ReadSummary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return SummaryFromJson(json::parse(in));
}

std::unique_ptr<teacher::TeacherPolicy> MakeTeacher(const RunConfig& config) {
  std::unique_ptr<teacher::TeacherPolicy> policy;
  if (config.teacher.kind == "dqn_snapshot") {
    policy = teacher::DqnSnapshotTeacher::Load(config.teacher.checkpoint);
  } else {
    policy = std::make_unique<teacher::ScriptedOracleTeacher>(
        envs::MakeEnvironment(config.env, 0));
  }
  if (config.teacher.noise > 0.0) {
    const int actions = envs::MakeEnvironment(config.env, 0)->spec().action_count;
    policy = std::make_unique<teacher::NoisyTeacher>(
        std::move(policy), config.teacher.noise, actions,
        config.teacher.noise_seed);
  }
  return policy;
}

double EvaluateGreedy(const student::DqnAgent& agent, envs::Environment& env,
                      int episodes) {
  double total = 0.0;
  for (int e = 0; e < episodes; ++e) {
    envs::Observation state = env.Reset();
    while (true) {
      envs::Transition tr = env.Step(agent.GreedyAction(state));
      total += tr.reward;
      if (tr.terminal || tr.truncated) break;
      state = std::move(tr.next_state);
    }
  }
  return total / static_cast<double>(episodes);
}

RunSummary Run(const RunConfig& config, std::uint64_t seed,
               const std::filesystem::path& out_dir) {
  ValidateRunConfig(config);
  std::filesystem::create_directories(out_dir);
  {
    RunConfig resolved = config;
    resolved.seeds = {seed};
    resolved.output_dir = out_dir.string();
    WriteJson(out_dir / "config.json", ToJson(resolved));
  }

  const RunSeeds seeds = RunSeeds::From(seed);
  auto env = envs::MakeEnvironment(config.env, seeds.env);
  auto eval_env = envs::MakeEnvironment(config.env, seeds.eval_env);
  const int obs_dim = env->spec().observation_dim;
  const int actions = env->spec().action_count;

  teacher::AdviceChannel channel(MakeTeacher(config), config.budget);
  student::DqnAgent student(obs_dim, actions, config.dqn, seeds.student);
  advising::AdvisingOrchestrator advisor(config.advising, channel, obs_dim,
                                         actions, seeds.advising);
  advising::Instrumentation instrumentation(channel, config.instrumentation);

  MetricsWriter writer(out_dir / "metrics.csv");
  std::ofstream action_log;
  if (config.record_actions) action_log.open(out_dir / "actions.txt");

  RunSummary summary;
  summary.env = config.env.name;
  summary.mode = std::string(advising::ModeName(config.advising.mode));
  summary.seed = seed;

  std::int64_t window_reused = 0, window_collected = 0;
  std::int64_t period_reused = 0, period_collected = 0;
  double score_sum = 0.0;

  auto running_accuracy = [&]() -> std::optional<double> {
    if (!instrumentation.enabled() || instrumentation.reuse_checked() == 0)
      return std::nullopt;
    return static_cast<double>(instrumentation.reuse_hits()) /
           static_cast<double>(instrumentation.reuse_checked());
  };

  auto hook = [&](const advising::StepRecord& r) {
    if (action_log.is_open()) action_log << r.decision.action << '\n';
    if (r.decision.source == advising::ActionSource::kReusedAdvice)
      ++window_reused, ++period_reused;
    if (r.decision.source == advising::ActionSource::kCollectedAdvice)
      ++window_collected, ++period_collected;

    if (r.t % config.diagnostic_window == 0) {
      MetricsRecord row;
      row.kind = RecordKind::kWindow;
      row.step = r.t;
      row.reuse_count_window = window_reused;
      row.collection_count_window = window_collected;
      row.tau_current = advisor.tau();
      row.budget_remaining = channel.remaining();
      row.reuse_accuracy_running = running_accuracy();
      writer.Append(row);
      window_reused = window_collected = 0;
    }
    if (r.t % config.eval_period == 0) {
      MetricsRecord row;
      row.kind = RecordKind::kEval;
      row.step = r.t;
      row.eval_score = EvaluateGreedy(student, *eval_env, config.eval_episodes);
      row.reuse_count_window = period_reused;
      row.collection_count_window = period_collected;
      row.tau_current = advisor.tau();
      row.budget_remaining = channel.remaining();
      row.reuse_accuracy_running = running_accuracy();
      writer.Append(row);
      period_reused = period_collected = 0;
      score_sum += *row.eval_score;
      summary.final_score = *row.eval_score;
      ++summary.eval_records;
    }
  };

  std::int64_t t = 0;
  try {
    while (t < config.total_steps)
      advising::RunEpisode(*env, advisor, student, t, config.total_steps,
                           &instrumentation, hook);
  } catch (const TrainingDivergence& e) {
    summary.status = std::string("failed: ") + e.what();
  }
  if (action_log.is_open()) action_log.flush();

  summary.total_steps = t;
  summary.auc = summary.eval_records > 0
                    ? score_sum / static_cast<double>(summary.eval_records)
                    : 0.0;
  summary.total_collected = advisor.total_collected();
  summary.total_reused = advisor.total_reused();
  summary.reuse_ratio_pct =
      t > 0 ? 100.0 * static_cast<double>(summary.total_reused) /
                  static_cast<double>(t)
            : 0.0;
  summary.reuse_hits = instrumentation.reuse_hits();
  if (auto acc = running_accuracy()) summary.reuse_accuracy_pct = 100.0 * *acc;
  summary.metered_queries = channel.ledger().metered_queries;
  summary.shadow_queries = channel.ledger().shadow_queries;
  summary.budget_remaining = channel.remaining();
  summary.imitation_events = advisor.model().training_events();
  summary.final_tau = advisor.tau();
  summary.advice_buffer_size = static_cast<std::int64_t>(advisor.buffer().size());

  const auto caps = advisor.capabilities();
  if (caps.reuses_advice || config.advising.record_advice)
    imitation::WriteAdviceBuffer(out_dir / "advice.csv", advisor.buffer());
  if (config.save_checkpoints) {
    nn::SaveCheckpoint(out_dir / "student.ckpt", student.online_net());
    if (advisor.model().trained()) {
      std::map<std::string, double> meta;
      if (advisor.tau()) meta["tau"] = *advisor.tau();
      nn::SaveCheckpoint(out_dir / "imitation.ckpt", advisor.model().net(), meta);
    }
  }
  WriteJson(out_dir / "summary.json", ToJson(summary));
  return summary;
}

}  // namespace air::harness
