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

#include "air/harness/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "air/errors.h"

namespace air::harness {
namespace {

using nlohmann::json;

std::int64_t Scaled(double full_value, double scale) {
  return std::max<std::int64_t>(1, std::llround(full_value * scale));
}

// Reads one JSON object, remembering which keys were consumed so that
// anything left over can be reported as unknown.
class Section {
 public:
  Section(const json& doc, std::string path) : doc_(doc), path_(std::move(path)) {
    if (!doc_.is_object())
      throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string KeyPath(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  bool Has(const std::string& key) const { return doc_.contains(key); }

  template <typename T>
  void Get(const std::string& key, T& out) {
    if (!doc_.contains(key)) return;
    seen_.insert(key);
    const json& v = doc_.at(key);
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) throw ConfigError(KeyPath(key), "expected a boolean");
      } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) throw ConfigError(KeyPath(key), "expected an integer");
        if constexpr (std::is_unsigned_v<T>)
          if (v.get<std::int64_t>() < 0 && !v.is_number_unsigned())
            throw ConfigError(KeyPath(key), "expected a non-negative integer");
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) throw ConfigError(KeyPath(key), "expected a number");
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) throw ConfigError(KeyPath(key), "expected a string");
      }
      out = v.get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(KeyPath(key), e.what());
    }
  }

  Section Sub(const std::string& key) {
    seen_.insert(key);
    return Section(doc_.at(key), KeyPath(key));
  }

  void Finish() const {
    for (const auto& item : doc_.items())
      if (!seen_.count(item.key()))
        throw ConfigError(KeyPath(item.key()), "unknown key");
  }

 private:
  const json& doc_;
  std::string path_;
  std::set<std::string> seen_;
};

}  // namespace

RunConfig DefaultRunConfig(double scale) {
  AIR_CHECK(scale > 0.0, "scale must be positive");
  RunConfig c;
  c.scale = scale;
  c.total_steps = Scaled(kFullScaleTotalSteps, scale);
  c.budget = Scaled(25000, scale);
  c.eval_period = Scaled(50000, scale);

  c.dqn.gamma = 0.99;
  c.dqn.learning_rate = 625e-7;
  c.dqn.batch_size = 32;
  c.dqn.replay_min_size = static_cast<std::size_t>(Scaled(50000, scale));
  c.dqn.replay_capacity = static_cast<std::size_t>(Scaled(500000, scale));
  c.dqn.target_update_period = Scaled(7500, scale);
  c.dqn.epsilon = {1.0, 0.01, Scaled(500000, scale)};

  auto& a = c.advising;
  a.imitation.dropout_rate = 0.35;
  a.imitation.mc_passes = 100;
  a.imitation.percentile = 90.0;
  a.imitation.learning_rate = 1e-4;
  a.trigger.n_min = Scaled(2500, scale);
  a.trigger.t_min = Scaled(50000, scale);
  a.trigger.k_init = Scaled(200000, scale);
  a.trigger.k_periodic = Scaled(50000, scale);
  a.trigger.batch_size = 32;
  a.schedule = {0.5, 0.1, Scaled(500000, scale), Scaled(2000000, scale)};
  a.fixed_reuse_probability = 0.5;
  a.reuse_window_end = c.dqn.epsilon.decay_steps;
  a.manual_tau = 0.01;
  a.single_imitation_fallback_step = c.total_steps / 2;
  return c;
}

RunConfig ParseRunConfig(const json& doc) {
  Section root(doc, "");
  double scale = kDeskScale;
  root.Get("scale", scale);
  if (!(scale > 0.0)) throw ConfigError("scale", "must be positive");
  RunConfig c = DefaultRunConfig(scale);

  if (root.Has("env")) {
    Section s = root.Sub("env");
    s.Get("name", c.env.name);
    s.Get("max_episode_steps", c.env.max_episode_steps);
    s.Get("corridor_length", c.env.corridor_length);
    s.Get("corridor_actions", c.env.corridor_actions);
    s.Get("slip", c.env.slip);
    s.Get("step_penalty", c.env.step_penalty);
    s.Finish();
  }
  root.Get("seeds", c.seeds);
  std::string mode;
  root.Get("mode", mode);
  if (!mode.empty()) {
    auto parsed = advising::ParseMode(mode);
    if (!parsed) throw ConfigError("mode", "unknown student mode '" + mode + "'");
    c.advising.mode = *parsed;
  }
  root.Get("budget", c.budget);
  if (root.Has("total_steps")) {
    root.Get("total_steps", c.total_steps);
    c.advising.single_imitation_fallback_step = c.total_steps / 2;
  }
  root.Get("eval_period", c.eval_period);
  root.Get("eval_episodes", c.eval_episodes);
  root.Get("diagnostic_window", c.diagnostic_window);
  root.Get("instrumentation", c.instrumentation);
  root.Get("record_actions", c.record_actions);
  root.Get("save_checkpoints", c.save_checkpoints);
  root.Get("output_dir", c.output_dir);

  if (root.Has("dqn")) {
    Section s = root.Sub("dqn");
    s.Get("hidden_layers", c.dqn.hidden_layers);
    s.Get("gamma", c.dqn.gamma);
    s.Get("learning_rate", c.dqn.learning_rate);
    s.Get("adam_epsilon", c.dqn.adam_epsilon);
    s.Get("batch_size", c.dqn.batch_size);
    s.Get("replay_min_size", c.dqn.replay_min_size);
    s.Get("replay_capacity", c.dqn.replay_capacity);
    s.Get("target_update_period", c.dqn.target_update_period);
    s.Get("train_period", c.dqn.train_period);
    s.Get("eps_init", c.dqn.epsilon.eps_init);
    s.Get("eps_final", c.dqn.epsilon.eps_final);
    if (s.Has("eps_decay_steps")) {
      s.Get("eps_decay_steps", c.dqn.epsilon.decay_steps);
      c.advising.reuse_window_end = c.dqn.epsilon.decay_steps;
    }
    s.Finish();
  }
  if (root.Has("imitation")) {
    Section s = root.Sub("imitation");
    auto& im = c.advising.imitation;
    auto& tr = c.advising.trigger;
    s.Get("hidden_layers", im.hidden_layers);
    s.Get("dropout_rate", im.dropout_rate);
    s.Get("mc_passes", im.mc_passes);
    s.Get("percentile", im.percentile);
    s.Get("learning_rate", im.learning_rate);
    s.Get("adam_epsilon", im.adam_epsilon);
    s.Get("batch_size", tr.batch_size);
    s.Get("n_min", tr.n_min);
    s.Get("t_min", tr.t_min);
    s.Get("k_init", tr.k_init);
    s.Get("k_periodic", tr.k_periodic);
    s.Finish();
  }
  if (root.Has("reuse")) {
    Section s = root.Sub("reuse");
    auto& a = c.advising;
    s.Get("rho_init", a.schedule.rho_init);
    s.Get("rho_final", a.schedule.rho_final);
    s.Get("decay_start", a.schedule.decay_start);
    s.Get("decay_end", a.schedule.decay_end);
    s.Get("fixed_probability", a.fixed_reuse_probability);
    s.Get("window_end", a.reuse_window_end);
    s.Finish();
  }
  if (root.Has("advising")) {
    Section s = root.Sub("advising");
    auto& a = c.advising;
    s.Get("manual_tau", a.manual_tau);
    s.Get("single_imitation_fallback_step", a.single_imitation_fallback_step);
    s.Get("random_advice_probability", a.random_advice_probability);
    s.Get("collect_requires_reuse_enabled", a.collect_requires_reuse_enabled);
    s.Get("extended_collect_requires_reuse_enabled",
          a.extended_collect_requires_reuse_enabled);
    s.Get("record_advice", a.record_advice);
    s.Finish();
  }
  if (root.Has("teacher")) {
    Section s = root.Sub("teacher");
    s.Get("kind", c.teacher.kind);
    s.Get("noise", c.teacher.noise);
    s.Get("noise_seed", c.teacher.noise_seed);
    s.Get("checkpoint", c.teacher.checkpoint);
    s.Finish();
  }
  root.Finish();
  ValidateRunConfig(c);
  return c;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot read " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("<file>", e.what());
  }
  return ParseRunConfig(doc);
}

void ValidateRunConfig(const RunConfig& c) {
  auto require = [](bool ok, const char* key, const char* what) {
    if (!ok) throw ConfigError(key, what);
  };
  const auto names = envs::EnvironmentNames();
  require(std::find(names.begin(), names.end(), c.env.name) != names.end(),
          "env.name", "unknown environment");
  require(!c.seeds.empty(), "seeds", "at least one seed is required");
  require(c.budget >= 0, "budget", "must be non-negative");
  require(c.total_steps > 0, "total_steps", "must be positive");
  require(c.eval_period > 0, "eval_period", "must be positive");
  require(c.eval_episodes > 0, "eval_episodes", "must be positive");
  require(c.diagnostic_window > 0, "diagnostic_window", "must be positive");
  require(c.dqn.gamma >= 0.0 && c.dqn.gamma < 1.0, "dqn.gamma", "must lie in [0, 1)");
  require(c.dqn.learning_rate > 0.0, "dqn.learning_rate", "must be positive");
  require(c.dqn.batch_size > 0, "dqn.batch_size", "must be positive");
  require(c.dqn.replay_min_size > 0, "dqn.replay_min_size", "must be positive");
  require(c.dqn.replay_capacity >= c.dqn.replay_min_size, "dqn.replay_capacity",
          "must be at least replay_min_size");
  require(c.dqn.target_update_period > 0, "dqn.target_update_period", "must be positive");
  require(c.dqn.train_period > 0, "dqn.train_period", "must be positive");
  require(c.dqn.epsilon.decay_steps > 0, "dqn.eps_decay_steps", "must be positive");
  const auto& im = c.advising.imitation;
  require(im.dropout_rate >= 0.0 && im.dropout_rate <= 1.0,
          "imitation.dropout_rate", "must lie in [0, 1]");
  require(im.mc_passes > 0, "imitation.mc_passes", "must be positive");
  require(im.percentile > 0.0 && im.percentile <= 100.0, "imitation.percentile",
          "must lie in (0, 100]");
  require(im.learning_rate > 0.0, "imitation.learning_rate", "must be positive");
  const auto& tr = c.advising.trigger;
  require(tr.n_min > 0, "imitation.n_min", "must be positive");
  require(tr.t_min > 0, "imitation.t_min", "must be positive");
  require(tr.k_init > 0, "imitation.k_init", "must be positive");
  require(tr.k_periodic > 0, "imitation.k_periodic", "must be positive");
  require(tr.batch_size > 0, "imitation.batch_size", "must be positive");
  const auto& rs = c.advising.schedule;
  require(rs.rho_init >= 0.0 && rs.rho_init <= 1.0, "reuse.rho_init", "must lie in [0, 1]");
  require(rs.rho_final >= 0.0 && rs.rho_final <= rs.rho_init, "reuse.rho_final",
          "must lie in [0, rho_init]");
  require(rs.decay_start >= 0 && rs.decay_end >= rs.decay_start, "reuse.decay_end",
          "must not precede decay_start");
  require(c.advising.manual_tau >= 0.0, "advising.manual_tau", "must be non-negative");
  require(c.teacher.kind == "scripted_oracle" || c.teacher.kind == "dqn_snapshot",
          "teacher.kind", "must be scripted_oracle or dqn_snapshot");
  require(c.teacher.kind != "dqn_snapshot" || !c.teacher.checkpoint.empty(),
          "teacher.checkpoint", "required for dqn_snapshot teachers");
  require(c.teacher.noise >= 0.0 && c.teacher.noise <= 1.0, "teacher.noise",
          "must lie in [0, 1]");
}

json ToJson(const RunConfig& c) {
  const auto& a = c.advising;
  json doc;
  doc["scale"] = c.scale;
  doc["env"] = {{"name", c.env.name},
                {"max_episode_steps", c.env.max_episode_steps},
                {"corridor_length", c.env.corridor_length},
                {"corridor_actions", c.env.corridor_actions},
                {"slip", c.env.slip},
                {"step_penalty", c.env.step_penalty}};
  doc["seeds"] = c.seeds;
  doc["mode"] = std::string(advising::ModeName(a.mode));
  doc["budget"] = c.budget;
  doc["total_steps"] = c.total_steps;
  doc["eval_period"] = c.eval_period;
  doc["eval_episodes"] = c.eval_episodes;
  doc["diagnostic_window"] = c.diagnostic_window;
  doc["instrumentation"] = c.instrumentation;
  doc["record_actions"] = c.record_actions;
  doc["save_checkpoints"] = c.save_checkpoints;
  doc["output_dir"] = c.output_dir;
  doc["dqn"] = {{"hidden_layers", c.dqn.hidden_layers},
                {"gamma", c.dqn.gamma},
                {"learning_rate", c.dqn.learning_rate},
                {"adam_epsilon", c.dqn.adam_epsilon},
                {"batch_size", c.dqn.batch_size},
                {"replay_min_size", c.dqn.replay_min_size},
                {"replay_capacity", c.dqn.replay_capacity},
                {"target_update_period", c.dqn.target_update_period},
                {"train_period", c.dqn.train_period},
                {"eps_init", c.dqn.epsilon.eps_init},
                {"eps_final", c.dqn.epsilon.eps_final},
                {"eps_decay_steps", c.dqn.epsilon.decay_steps}};
  doc["imitation"] = {{"hidden_layers", a.imitation.hidden_layers},
                      {"dropout_rate", a.imitation.dropout_rate},
                      {"mc_passes", a.imitation.mc_passes},
                      {"percentile", a.imitation.percentile},
                      {"learning_rate", a.imitation.learning_rate},
                      {"adam_epsilon", a.imitation.adam_epsilon},
                      {"batch_size", a.trigger.batch_size},
                      {"n_min", a.trigger.n_min},
                      {"t_min", a.trigger.t_min},
                      {"k_init", a.trigger.k_init},
                      {"k_periodic", a.trigger.k_periodic}};
  doc["reuse"] = {{"rho_init", a.schedule.rho_init},
                  {"rho_final", a.schedule.rho_final},
                  {"decay_start", a.schedule.decay_start},
                  {"decay_end", a.schedule.decay_end},
                  {"fixed_probability", a.fixed_reuse_probability},
                  {"window_end", a.reuse_window_end}};
  doc["advising"] = {
      {"manual_tau", a.manual_tau},
      {"single_imitation_fallback_step", a.single_imitation_fallback_step},
      {"random_advice_probability", a.random_advice_probability},
      {"collect_requires_reuse_enabled", a.collect_requires_reuse_enabled},
      {"extended_collect_requires_reuse_enabled",
       a.extended_collect_requires_reuse_enabled},
      {"record_advice", a.record_advice}};
  doc["teacher"] = {{"kind", c.teacher.kind},
                    {"noise", c.teacher.noise},
                    {"noise_seed", c.teacher.noise_seed},
                    {"checkpoint", c.teacher.checkpoint}};
  return doc;
}

}  // namespace air::harness
