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


// Acceptance runner: one PASS/FAIL line per criterion P1..P10.
//
//   air_acceptance [--out DIR] [--jobs N] [P1 P2 ...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "air/advising/episode.h"
#include "air/advising/instrumentation.h"
#include "air/advising/orchestrator.h"
#include "air/advising/reuse_schedule.h"
#include "air/envs/registry.h"
#include "air/harness/config.h"
#include "air/harness/diversity.h"
#include "air/harness/metrics.h"
#include "air/harness/runner.h"
#include "air/harness/suite.h"
#include "air/imitation/imitation_model.h"
#include "air/nn/losses.h"
#include "air/random.h"
#include "air/student/epsilon_schedule.h"
#include "air/teacher/teacher.h"
#include "oracles.h"

namespace fs = std::filesystem;
using namespace air;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[fail] " << what << "; ";
    }
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Options {
  fs::path out = "acceptance_runs";
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

// ------------------------------------------------------------------- P1

Eigen::MatrixXd RandomInputs(int dim, int batch, Rng& rng) {
  Eigen::MatrixXd x(dim, batch);
  for (int c = 0; c < batch; ++c)
    for (int r = 0; r < dim; ++r) x(r, c) = 2.0 * UniformUnit(rng) - 1.0;
  return x;
}

double MinAbsPreActivation(const nn::Network& net, const Eigen::MatrixXd& x) {
  nn::ForwardCache cache;
  net.Evaluate(x, &cache);
  double m = 1e300;
  for (const auto& z : cache.pre_activations) m = std::min(m, z.cwiseAbs().minCoeff());
  return m;
}

double WorstComponentError(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max(std::abs(a[i]), std::abs(b[i]));
    if (scale > 0.0) worst = std::max(worst, std::abs(a[i] - b[i]) / scale);
  }
  return worst;
}

void SetParams(nn::Network& net, const std::vector<double>& p) {
  std::copy(p.begin(), p.end(), net.mutable_parameters().begin());
}

void P1(Outcome& out, const Options&) {
  const auto start = Clock::now();
  constexpr double kStep = 1e-4, kTol = 1e-3, kKink = 1e-2;
  double worst_nll = 0.0, worst_td = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    nn::Network net({5, {12, 9}, 4, 0.35, nn::HeadKind::kSoftmaxClassifier}, seed);
    Rng rng(seed * 31);
    Eigen::MatrixXd x = RandomInputs(5, 8, rng);
    while (MinAbsPreActivation(net, x) < kKink) x = RandomInputs(5, 8, rng);
    std::vector<int> labels(8);
    for (int& y : labels) y = UniformInt(rng, 4);
    const nn::DropoutMasks masks = net.DrawMasks(8, rng);
    const auto analytic = nn::NllLossAndGradWithMasks(net, x, labels, &masks).gradients;
    std::vector<double> p(net.parameters().begin(), net.parameters().end());
    const auto numeric = testing::NumericGradient(p, [&] {
      SetParams(net, p);
      return nn::NllLossAndGradWithMasks(net, x, labels, &masks).loss;
    }, kStep);
    worst_nll = std::max(worst_nll, WorstComponentError(analytic, numeric));

    const nn::NetworkSpec qspec{6, {10, 8}, 3, 0.0, nn::HeadKind::kQDueling};
    nn::Network online(qspec, seed), target(qspec, seed + 100);
    nn::TdBatch batch;
    batch.states = RandomInputs(6, 10, rng);
    while (MinAbsPreActivation(online, batch.states) < kKink)
      batch.states = RandomInputs(6, 10, rng);
    batch.next_states = RandomInputs(6, 10, rng);
    for (int i = 0; i < 10; ++i) {
      batch.actions.push_back(UniformInt(rng, 3));
      batch.rewards.push_back(2.0 * UniformUnit(rng) - 1.0);
      batch.terminals.push_back(i % 4 == 0);
    }
    const auto td = nn::TdLossAndGrad(online, target, batch, 0.99).gradients;
    const Eigen::VectorXd y = nn::DoubleQTargets(online, target, batch, 0.99);
    std::vector<double> q(online.parameters().begin(), online.parameters().end());
    const auto td_numeric = testing::NumericGradient(q, [&] {
      SetParams(online, q);
      const Eigen::MatrixXd values = online.Evaluate(batch.states);
      double loss = 0.0;
      for (int i = 0; i < 10; ++i) {
        const double e = values(batch.actions[i], i) - y(i);
        loss += e * e;
      }
      return loss / 10.0;
    }, kStep);
    worst_td = std::max(worst_td, WorstComponentError(td, td_numeric));
  }
  const double elapsed = Seconds(start);
  out.detail << "worst rel err nll=" << worst_nll << " td=" << worst_td
             << " time=" << elapsed << "s";
  out.Require(worst_nll < kTol, "NLL gradient");
  out.Require(worst_td < kTol, "TD gradient");
  out.Require(elapsed < 10.0, "runtime");
}

// ------------------------------------------------------------------- P2

void P2(Outcome& out, const Options&) {
  Rng rng(2024);
  int checked = 0, mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> u(1 + UniformInt(rng, 500));
    const int levels = 1 + UniformInt(rng, 50);  // small pools give repeats
    for (double& v : u) v = UniformInt(rng, levels) * 0.01 + UniformUnit(rng) * (trial % 2);
    for (int p : {50, 90, 100}) {
      ++checked;
      const double got = *imitation::NearestRankPercentile(u, p);
      if (got != testing::BruteForcePercentile(u, p)) ++mismatches;
    }
  }
  // tune_threshold end to end against a twin model's uncertainties.
  int tuned = 0, tuned_mismatches = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    imitation::ImitationConfig c;
    c.hidden_layers = {16};
    c.mc_passes = 16;
    c.learning_rate = 1e-2;
    c.percentile = seed % 2 ? 90.0 : 50.0;
    imitation::AdviceBuffer buffer;
    Rng data(seed);
    for (int i = 0; i < 80; ++i)
      buffer.Add({UniformUnit(data), UniformUnit(data), UniformUnit(data)}, UniformInt(data, 3));
    imitation::ImitationModel model(3, 3, c, seed), twin(3, 3, c, seed);
    imitation::AdviceBuffer copy = buffer;
    model.Train(buffer, 100, 16, 1);
    twin.Train(copy, 100, 16, 1);
    std::vector<double> u;
    for (const auto& pair : copy.pairs())
      if (twin.GreedyAction(pair.state) == pair.action) u.push_back(twin.Uncertainty(pair.state));
    if (u.empty()) continue;
    ++tuned;
    if (model.TuneThreshold(buffer) !=
        testing::BruteForcePercentile(u, static_cast<int>(c.percentile)))
      ++tuned_mismatches;
  }
  out.detail << checked << " percentile cases, " << mismatches << " mismatches; " << tuned
             << " tune_threshold cases, " << tuned_mismatches << " mismatches";
  out.Require(mismatches == 0, "percentile");
  out.Require(tuned > 0 && tuned_mismatches == 0, "tune_threshold");
}

// ------------------------------------------------------------------- P3

void P3(Outcome& out, const Options&) {
  imitation::ImitationConfig c;
  c.hidden_layers = {32, 16};
  c.dropout_rate = 0.0;
  imitation::ImitationModel no_dropout(5, 4, c, 3);
  Rng rng(5);
  bool all_zero = true;
  for (int i = 0; i < 200; ++i) {
    envs::Observation s(5);
    for (double& v : s) v = 2.0 * UniformUnit(rng) - 1.0;
    all_zero &= no_dropout.Uncertainty(s) == 0.0;
  }
  out.Require(all_zero, "dropout 0 gives zero uncertainty");

  imitation::ImitationConfig tc;
  tc.hidden_layers = {1};
  tc.dropout_rate = 0.5;
  tc.mc_passes = 2;
  imitation::ImitationModel toggle(1, 2, tc, 1);
  const double params[] = {1.0, 0.0, 1000.0, 0.0, 0.0, 1000.0};
  std::copy(std::begin(params), std::end(params), toggle.mutable_net().mutable_parameters().begin());
  nn::DropoutMasks masks;
  masks.layers.emplace_back(1, 2);
  masks.layers[0] << 2.0, 0.0;
  const double fixture = toggle.UncertaintyWithMasks({1.0}, masks);
  out.Require(std::abs(fixture - 0.25) <= 1e-9, "two-mask fixture");

  c.dropout_rate = 0.35;
  imitation::ImitationModel model(5, 4, c, 7);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const nn::DropoutMasks m = model.net().DrawMasks(100, rng);
    std::vector<int> order(100);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    nn::DropoutMasks permuted = m;
    for (std::size_t l = 0; l < m.layers.size(); ++l)
      for (int i = 0; i < 100; ++i) permuted.layers[l].col(i) = m.layers[l].col(order[i]);
    envs::Observation s(5);
    for (double& v : s) v = 2.0 * UniformUnit(rng) - 1.0;
    worst = std::max(worst, std::abs(model.UncertaintyWithMasks(s, m) -
                                     model.UncertaintyWithMasks(s, permuted)));
  }
  out.Require(worst <= 1e-12, "pass-order independence");
  out.detail << "fixture=" << std::setprecision(17) << fixture << " worst permutation diff="
             << worst;
}

// ------------------------------------------------------------ P4 and P5

harness::RunConfig FuzzConfig(advising::StudentMode mode, const std::string& env,
                              std::int64_t budget, std::int64_t steps) {
  harness::RunConfig c = harness::DefaultRunConfig(0.001);
  c.env.name = env;
  c.advising.mode = mode;
  c.budget = budget;
  c.total_steps = steps;
  c.dqn.hidden_layers = {16};
  c.dqn.learning_rate = 1e-3;
  c.dqn.replay_min_size = 64;
  c.advising.imitation.hidden_layers = {16};
  c.advising.imitation.mc_passes = 8;
  c.advising.imitation.learning_rate = 1e-2;
  c.advising.trigger = {20, 100, 50, 20, 16};
  c.advising.schedule = {0.5, 0.1, steps / 10, steps * 4 / 10};
  c.advising.reuse_window_end = steps / 2;
  c.advising.single_imitation_fallback_step = steps / 2;
  c.teacher.noise = 0.1;
  return c;
}

struct Session {
  explicit Session(const harness::RunConfig& c, std::uint64_t seed)
      : config(c),
        seeds(harness::RunSeeds::From(seed)),
        env(envs::MakeEnvironment(c.env, seeds.env)),
        channel(harness::MakeTeacher(c), c.budget),
        student(env->spec().observation_dim, env->spec().action_count, c.dqn, seeds.student),
        advisor(c.advising, channel, env->spec().observation_dim, env->spec().action_count,
                seeds.advising),
        instrumentation(channel, true) {}

  void Run(const advising::StepHook& hook) {
    while (t < config.total_steps)
      advising::RunEpisode(*env, advisor, student, t, config.total_steps, &instrumentation,
                           hook);
  }

  harness::RunConfig config;
  harness::RunSeeds seeds;
  std::unique_ptr<envs::Environment> env;
  teacher::AdviceChannel channel;
  student::DqnAgent student;
  advising::AdvisingOrchestrator advisor;
  advising::Instrumentation instrumentation;
  std::int64_t t = 0;
};

void P4(Outcome& out, const Options&) {
  Rng rng(4444);
  const std::vector<std::string> envs = {"corridor", "keydoor", "slippery_keydoor"};
  std::int64_t steps_checked = 0, violations = 0, exhausted = 0;
  for (int run = 0; run < 100; ++run) {
    const auto mode = advising::kAllModes[run % 7];
    const std::string env = envs[UniformInt(rng, 3)];
    const std::int64_t budget = UniformInt(rng, 301);
    const std::int64_t steps = 400 + UniformInt(rng, 1201);
    Session s(FuzzConfig(mode, env, budget, steps), rng());
    s.Run([&](const advising::StepRecord&) {
      const auto& l = s.channel.ledger();
      ++steps_checked;
      if (l.metered_queries + l.remaining != l.initial_budget || l.remaining < 0 ||
          s.advisor.total_collected() > budget)
        ++violations;
    });
    if (s.channel.remaining() == 0 && budget > 0) ++exhausted;
  }
  out.detail << "100 runs, " << steps_checked << " steps checked, " << violations
             << " violations, " << exhausted << " runs exhausted their budget";
  out.Require(violations == 0, "budget conservation");
  out.Require(exhausted > 0, "fuzz reaches budget exhaustion");
}

void P5(Outcome& out, const Options&) {
  std::int64_t reuses = 0, collections = 0, violations = 0;
  for (auto mode : {advising::StudentMode::kAR, advising::StudentMode::kARA,
                    advising::StudentMode::kARAE, advising::StudentMode::kAIR}) {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      Session s(FuzzConfig(mode, "keydoor", 300, 4000), seed);
      std::int64_t metered_before = 0;
      s.Run([&](const advising::StepRecord& r) {
        const auto metered = s.channel.ledger().metered_queries;
        const bool queried = metered - metered_before == 1;
        if (metered - metered_before > 1) ++violations;
        metered_before = metered;
        const bool collected = r.decision.source == advising::ActionSource::kCollectedAdvice;
        if (queried != collected) ++violations;  // advice executed iff paid for
        if (collected) ++collections;
        if (r.decision.source == advising::ActionSource::kReusedAdvice) {
          ++reuses;
          const auto tau = s.advisor.tau();
          if (!s.advisor.model().trained() || !tau || !r.decision.uncertainty ||
              !(*r.decision.uncertainty < *tau))
            ++violations;
        }
      });
    }
  }
  // Uncertainty exactly at tau: neither collect (> tau) nor reuse (< tau).
  harness::RunConfig c = FuzzConfig(advising::StudentMode::kAIR, "keydoor", 50, 100);
  c.advising.imitation.dropout_rate = 0.0;
  c.advising.schedule.rho_init = c.advising.schedule.rho_final = 1.0;
  Session boundary(c, 9);
  boundary.advisor.mutable_model().set_trained(true);
  boundary.advisor.mutable_model().SetThreshold(0.0);
  boundary.advisor.BeginEpisode(1);
  const auto d = boundary.advisor.ChooseAction(boundary.env->Reset(), boundary.student, 1);
  const bool boundary_ok = boundary.advisor.episode().reuse_enabled &&
                           d.uncertainty == 0.0 &&
                           d.source == advising::ActionSource::kSelfPolicy &&
                           boundary.channel.remaining() == 50;
  out.detail << reuses << " reuses, " << collections << " collections, " << violations
             << " violations, boundary " << (boundary_ok ? "ok" : "broken");
  out.Require(reuses > 0 && collections > 0, "gates exercised");
  out.Require(violations == 0, "gating");
  out.Require(boundary_ok, "exact-tau boundary");
}

// ------------------------------------------------------------------- P6

void P6(Outcome& out, const Options&) {
  const student::EpsilonSchedule eps{1.0, 0.01, 20000};
  out.Require(eps(0) == 1.0 && eps(10000) == (1.0 + 0.01) / 2.0 && eps(20000) == 0.01 &&
                  eps(50000) == 0.01,
              "epsilon");
  const advising::ReuseSchedule rho{0.5, 0.1, 20000, 80000};
  out.Require(rho.Rho(20000) == 0.5 && rho.Rho(50000) == 0.3 && rho.Rho(80000) == 0.1 &&
                  rho.Rho(200000) == 0.1,
              "rho");
  harness::RunConfig c = FuzzConfig(advising::StudentMode::kAIR, "keydoor", 0, 100);
  c.advising.schedule = rho;
  Session s(c, 6);
  int enabled = 0;
  for (int e = 0; e < 10000; ++e) enabled += s.advisor.BeginEpisode(50000).reuse_enabled;
  const double rate = enabled / 10000.0;
  out.detail << "eps mid=" << eps(10000) << " rho mid=" << rho.Rho(50000)
             << " enable rate=" << rate;
  out.Require(std::abs(rate - 0.3) <= 0.015, "Bernoulli rate");
}

// ------------------------------------------------------------------- P7

void P7(Outcome& out, const Options&) {
  auto buffer_with = [](std::int64_t total, std::int64_t trained_size, std::int64_t t_last) {
    imitation::AdviceBuffer b;
    for (std::int64_t i = 0; i < trained_size; ++i) b.Add({0.0}, 0);
    b.MarkTrained(t_last);
    for (std::int64_t i = trained_size; i < total; ++i) b.Add({0.0}, 0);
    return b;
  };
  imitation::ImitationTriggerConfig trig;
  trig.n_min = 100;
  trig.t_min = 50;
  out.Require(imitation::ShouldTrain(buffer_with(100, 0, 0), trig, 7), "example 1");
  out.Require(imitation::ShouldTrain(buffer_with(60, 0, 0), trig, 50), "example 2");
  out.Require(!imitation::ShouldTrain(buffer_with(40, 0, 0), trig, 500), "example 3");

  std::int64_t cases = 0, mismatches = 0;
  for (std::int64_t n_min : {100, 101}) {
    trig.n_min = n_min;
    const std::int64_t t_last = 1000, n_last = 37;
    for (std::int64_t fresh = 0; fresh <= 2 * n_min; ++fresh) {
      const auto b = buffer_with(n_last + fresh, n_last, t_last);
      for (std::int64_t elapsed = 0; elapsed <= 2 * trig.t_min; ++elapsed) {
        // "n_min new samples, or t_min steps with at least n_min / 2 new samples"
        const bool prose = fresh >= n_min || (elapsed >= trig.t_min && 2 * fresh >= n_min);
        ++cases;
        if (imitation::ShouldTrain(b, trig, t_last + elapsed) != prose) ++mismatches;
      }
    }
  }
  out.detail << cases << " cases, " << mismatches << " mismatches";
  out.Require(mismatches == 0, "truth table");
}

// ------------------------------------------------------------------- P8

void P8(Outcome& out, const Options& opt) {
  harness::RunConfig c = harness::DefaultRunConfig(0.006);
  c.env.name = "corridor";
  c.advising.mode = advising::StudentMode::kNA;
  out.Require(c.total_steps <= 30000, "step cap");
  auto tabular = envs::MakeTabularEnvironment(c.env, 0);
  const int horizon = envs::MakeEnvironment(c.env, 0)->spec().max_episode_steps;
  const double optimal = testing::OptimalReturn(*tabular, horizon);
  out.detail << "optimal=" << optimal << " steps=" << c.total_steps << " finals:";
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto start = Clock::now();
    const auto s = harness::Run(c, seed, opt.out / "p8" / ("seed" + std::to_string(seed)));
    const double elapsed = Seconds(start);
    out.detail << ' ' << s.final_score << " (" << std::setprecision(3) << elapsed << "s)";
    out.Require(s.ok(), "run status");
    out.Require(std::abs(s.final_score - optimal) <= 0.05 * std::abs(optimal), "optimality");
    out.Require(elapsed < 300.0, "per-run time");
  }
}

// ------------------------------------------------------------------- P9

harness::RunConfig P9Config() {
  harness::RunConfig c = harness::DefaultRunConfig();  // desk profile
  c.env.name = "keydoor";
  c.teacher.kind = "scripted_oracle";
  c.teacher.noise = 0.1;
  c.advising.record_advice = true;  // EA's buffer for the diversity comparison
  return c;
}

void P9(Outcome& out, const Options& opt) {
  const auto start = Clock::now();
  const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  const std::vector<advising::StudentMode> modes(advising::kAllModes.begin(),
                                                 advising::kAllModes.end());
  const fs::path root = opt.out / "p9";
  const auto results =
      harness::RunSuite(harness::ExpandSuite(P9Config(), modes, seeds, root), opt.jobs);
  const double elapsed = Seconds(start);
  harness::WriteSuiteReport(root / "suite_summary.csv", harness::Aggregate(results));

  std::map<std::string, std::vector<const harness::RunSummary*>> by_mode;
  bool all_ok = true;
  for (const auto& r : results) {
    by_mode[r.mode].push_back(&r);
    all_ok &= r.ok();
  }
  out.Require(all_ok, "all runs completed");
  auto mean = [&](const std::string& mode, auto field) {
    double total = 0.0;
    int n = 0;
    for (const auto* r : by_mode[mode]) {
      if (auto v = field(*r)) total += *v, ++n;
    }
    return n > 0 ? total / n : std::nan("");
  };
  auto auc = [&](const std::string& m) {
    return mean(m, [](const harness::RunSummary& r) { return std::optional<double>(r.auc); });
  };
  auto reused = [&](const std::string& m) {
    return mean(m, [](const harness::RunSummary& r) {
      return std::optional<double>(static_cast<double>(r.total_reused));
    });
  };
  auto accuracy = [&](const std::string& m) {
    return mean(m, [](const harness::RunSummary& r) { return r.reuse_accuracy_pct; });
  };

  out.detail << std::setprecision(4) << "AUC";
  for (auto m : modes) out.detail << ' ' << advising::ModeName(m) << '=' << auc(std::string(advising::ModeName(m)));
  // (a)
  const bool a = auc("AIR") > auc("NA") && auc("AR+A+E") > auc("NA");
  // (b)
  const double base = std::max(reused("AR"), reused("AR+A"));
  const bool b = reused("AIR") >= 5.0 * base && reused("AR+A+E") >= 5.0 * base;
  out.detail << "; reuses AR=" << reused("AR") << " AR+A=" << reused("AR+A")
             << " AR+A+E=" << reused("AR+A+E") << " AIR=" << reused("AIR");
  // (c)
  bool c = true;
  out.detail << "; accuracy%";
  for (const char* m : {"AR", "AR+A", "AR+A+E", "AIR"}) {
    const double acc = accuracy(m);
    out.detail << ' ' << m << '=' << acc;
    c &= acc >= 70.0;
  }
  // (d)
  int wins = 0;
  out.detail << "; AIR-only/EA-only/shared states";
  for (std::uint64_t seed : seeds) {
    const auto report = harness::DiversityFromRunDirs(
        {root / "keydoor" / "AIR" / ("seed" + std::to_string(seed)),
         root / "keydoor" / "EA" / ("seed" + std::to_string(seed))});
    if (report.pairs.size() != 1) continue;
    const auto& p = report.pairs[0];
    out.detail << ' ' << p.only_a << '/' << p.only_b << '/' << p.both;
    wins += p.only_a >= p.only_b;
  }
  const bool d = wins >= 3;
  out.detail << "; time=" << elapsed << "s";
  out.Require(a, "(a) AUC over NA");
  out.Require(b, "(b) 5x reuse");
  out.Require(c, "(c) accuracy >= 70%");
  out.Require(d, "(d) diversity in >= 3 of 5 seeds");
  out.Require(elapsed < 7200.0, "2 h budget");
}

// ------------------------------------------------------------------ P10

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void P10(Outcome& out, const Options& opt) {
  harness::RunConfig c = P9Config();
  c.total_steps = 20000;
  c.advising.mode = advising::StudentMode::kAIR;
  const fs::path a = opt.out / "p10" / "a", b = opt.out / "p10" / "b";
  harness::Run(c, 3, a);
  harness::Run(c, 3, b);
  const std::string ma = Slurp(a / "metrics.csv");
  out.Require(!ma.empty() && ma == Slurp(b / "metrics.csv"), "metrics bitwise identical");
  out.Require(Slurp(a / "summary.json") == Slurp(b / "summary.json"), "summary identical");

  harness::RunConfig na = c;
  na.advising.mode = advising::StudentMode::kNA;
  na.record_actions = true;
  const fs::path trace_dir = opt.out / "p10" / "na";
  harness::Run(na, 4, trace_dir);
  std::vector<int> logged;
  std::ifstream in(trace_dir / "actions.txt");
  for (int x; in >> x;) logged.push_back(x);
  const std::vector<int> plain = testing::PlainDqnActions(na, 4);
  out.detail << "metrics " << ma.size() << " bytes; NA trace " << logged.size()
             << " actions vs plain loop " << plain.size();
  out.Require(logged.size() == static_cast<std::size_t>(na.total_steps) && logged == plain,
              "NA trace equals plain DQN loop");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  std::vector<std::string> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--out" && i + 1 < argc) {
      opt.out = argv[++i];
    } else if (arg == "--jobs" && i + 1 < argc) {
      opt.jobs = std::max(1, std::atoi(argv[++i]));
    } else {
      only.push_back(arg);
    }
  }
  fs::create_directories(opt.out);

  const std::vector<std::pair<std::string, std::function<void(Outcome&, const Options&)>>>
      criteria = {{"P1", P1}, {"P2", P2}, {"P3", P3}, {"P4", P4}, {"P5", P5},
                  {"P6", P6}, {"P7", P7}, {"P8", P8}, {"P9", P9}, {"P10", P10}};
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    Outcome outcome;
    const auto start = Clock::now();
    try {
      check(outcome, opt);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail << "[exception] " << e.what();
    }
    failures += outcome.pass ? 0 : 1;
    std::cout << name << ' ' << (outcome.pass ? "PASS" : "FAIL") << "  ("
              << std::fixed << std::setprecision(1) << Seconds(start) << "s) "
              << std::defaultfloat << outcome.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
