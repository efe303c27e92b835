// Copyright 2026 The goalbench Authors
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

// goalbench: train, sweep, evaluate and inspect goal-conditioned agents.
//
//   goalbench train --task push --algo tqc --seed 0 --out runs/push
//   goalbench sweep --config push.cfg --seeds 5
//   goalbench evaluate --checkpoint runs/push/checkpoint_seed0.bin --task push
//   goalbench aggregate --in runs/push --out push.csv
//   goalbench rollout --task pick --policy scripted --out traj.csv

#include <chrono>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "goalbench/agents/checkpoint.h"
#include "goalbench/bench/curves.h"
#include "goalbench/bench/evaluation.h"
#include "goalbench/bench/run_config.h"
#include "goalbench/bench/scripted_policy.h"
#include "goalbench/bench/trainer.h"
#include "goalbench/envsim/env_config_io.h"
#include "goalbench/envsim/trajectory.h"
#include "goalbench/error.h"

namespace {

using goalbench::bench::RunConfig;
using goalbench::envsim::KeyValues;

struct RunFlags {
  std::string config_path;
  std::string task;
  std::string algo;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> steps;
  std::string reward;
  std::optional<std::size_t> eval_interval;
  std::optional<std::size_t> eval_episodes;
  std::string out;
  std::vector<std::string> overrides;

  void Register(CLI::App* app) {
    app->add_option("--config", config_path, "key = value run config file");
    app->add_option("--task", task, "push | slide | pick");
    app->add_option("--algo", algo, "ddpg | sac | tqc");
    app->add_option("--seed", seed, "run seed");
    app->add_option("--steps", steps, "environment steps");
    app->add_option("--reward", reward, "sparse | dense");
    app->add_option("--eval-interval", eval_interval, "steps between evaluations");
    app->add_option("--eval-episodes", eval_episodes, "episodes per evaluation");
    app->add_option("--out", out, "output directory");
    app->add_option("--set", overrides, "extra key=value overrides")
        ->take_all();
  }

  // Precedence: defaults < config file < --set < explicit flags.
  RunConfig Build() const {
    KeyValues values;
    if (!config_path.empty()) {
      values = goalbench::envsim::ReadKeyValueFile(config_path);
    }
    for (const std::string& kv : overrides) {
      KeyValues one = goalbench::envsim::ParseKeyValues(kv);
      if (one.empty()) {
        throw goalbench::FormatError("--set expects key=value, got '" + kv + "'");
      }
      for (auto& [k, v] : one) values[k] = v;
    }
    if (!task.empty()) values["task"] = task;
    if (!algo.empty()) values["algo"] = algo;
    if (seed) values["seed"] = std::to_string(*seed);
    if (steps) values["steps"] = *steps;
    if (!reward.empty()) values["reward_mode"] = reward;
    if (eval_interval) values["eval_interval"] = std::to_string(*eval_interval);
    if (eval_episodes) values["eval_episodes"] = std::to_string(*eval_episodes);
    if (!out.empty()) values["out"] = out;

    auto kind = goalbench::envsim::TaskKind::kPush;
    if (auto it = values.find("task"); it != values.end()) {
      kind = goalbench::envsim::ParseTaskKind(it->second);
    }
    RunConfig config =
        goalbench::bench::DefaultRunConfig(kind, goalbench::agents::Algorithm::kTqc);
    goalbench::bench::ApplyKeyValues(std::move(values), config);
    return config;
  }
};

goalbench::bench::ProgressFn Progress(bool quiet) {
  if (quiet) return {};
  const auto start = std::chrono::steady_clock::now();
  return [start](const goalbench::bench::EvalRecord& r,
                 const goalbench::agents::UpdateDiagnostics& d) {
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    fmt::print(stderr,
               "seed {} step {:>8} success {:.3f} return {:8.2f} "
               "critic {:.4f} alpha {:.4f} [{:.0f}s]\n",
               r.seed, r.step, r.success_rate, r.mean_return, d.critic_loss,
               d.alpha, elapsed);
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goal-conditioned manipulation benchmark"};
  app.require_subcommand(1);

  RunFlags train_flags;
  bool train_quiet = false;
  auto* train = app.add_subcommand("train", "train one seed");
  train_flags.Register(train);
  train->add_flag("--quiet", train_quiet, "no progress lines");

  RunFlags sweep_flags;
  std::size_t n_seeds = 3;
  bool sweep_quiet = false;
  auto* sweep = app.add_subcommand("sweep", "train consecutive seeds and aggregate");
  sweep_flags.Register(sweep);
  sweep->add_option("--seeds", n_seeds, "number of seeds")->check(CLI::PositiveNumber);
  sweep->add_flag("--quiet", sweep_quiet, "no progress lines");

  RunFlags eval_flags;
  std::string eval_checkpoint;
  std::size_t eval_episodes = 20;
  auto* evaluate = app.add_subcommand("evaluate", "test a saved checkpoint");
  eval_flags.Register(evaluate);
  evaluate->add_option("--checkpoint", eval_checkpoint, "checkpoint file")
      ->required();
  evaluate->add_option("--episodes", eval_episodes, "test episodes");

  std::string aggregate_dir;
  std::string aggregate_out;
  auto* aggregate = app.add_subcommand("aggregate", "median/std over curve files");
  aggregate->add_option("--in", aggregate_dir, "directory of curve_seed<N>.csv")
      ->required();
  aggregate->add_option("--out", aggregate_out,
                        "output CSV (default <in>/aggregate.csv)");

  RunFlags rollout_flags;
  std::string rollout_policy = "scripted";
  std::string rollout_checkpoint;
  std::string rollout_out;
  auto* rollout = app.add_subcommand("rollout", "dump one episode as CSV");
  rollout_flags.Register(rollout);
  rollout->add_option("--policy", rollout_policy, "scripted | checkpoint")
      ->check(CLI::IsMember({"scripted", "checkpoint"}));
  rollout->add_option("--checkpoint", rollout_checkpoint, "checkpoint file");
  rollout->add_option("--trajectory", rollout_out, "CSV path (default stdout)");

  auto* print_config = app.add_subcommand("config", "print the resolved run config");
  RunFlags print_flags;
  print_flags.Register(print_config);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train) {
      const RunConfig config = train_flags.Build();
      const auto result = goalbench::bench::Train(config, Progress(train_quiet));
      fmt::print("final test success: {} %\ncurve: {}\ncheckpoint: {}\n",
                 result.final_test.Format(), result.curve_path.string(),
                 result.checkpoint_path.string());
    } else if (*sweep) {
      const RunConfig config = sweep_flags.Build();
      const auto result =
          goalbench::bench::Sweep(config, n_seeds, Progress(sweep_quiet));
      for (std::size_t i = 0; i < result.runs.size(); ++i) {
        fmt::print("seed {}: {} %\n", config.seed + i,
                   result.runs[i].final_test.Format());
      }
      fmt::print("aggregate: {}\n", result.aggregate_path.string());
    } else if (*evaluate) {
      const RunConfig config = eval_flags.Build();
      const auto agent = goalbench::agents::LoadCheckpoint(
          std::filesystem::path(eval_checkpoint));
      const auto summary = goalbench::bench::FinalTest(
          *agent, config.task, eval_episodes, config.seed);
      fmt::print("success: {} % over {} episodes\n", summary.Format(),
                 summary.episodes);
    } else if (*aggregate) {
      const auto curves = goalbench::bench::ReadCurveDirectory(aggregate_dir);
      const auto rows = goalbench::bench::AggregateCurves(curves);
      const auto path = aggregate_out.empty()
                            ? std::filesystem::path(aggregate_dir) / "aggregate.csv"
                            : std::filesystem::path(aggregate_out);
      goalbench::bench::WriteAggregateCsv(path, rows);
      fmt::print("{} seeds, {} steps -> {}\n", curves.size(), rows.size(),
                 path.string());
    } else if (*rollout) {
      const RunConfig config = rollout_flags.Build();
      std::unique_ptr<goalbench::agents::Agent> agent;
      goalbench::bench::Policy policy;
      if (rollout_policy == "checkpoint") {
        if (rollout_checkpoint.empty()) {
          throw goalbench::ContractViolation("--policy checkpoint needs --checkpoint");
        }
        agent = goalbench::agents::LoadCheckpoint(
            std::filesystem::path(rollout_checkpoint));
        policy = goalbench::bench::GreedyPolicy(*agent);
      } else {
        const auto task = config.task;
        policy = [task](const goalbench::envsim::GoalObservation&,
                        const goalbench::envsim::EnvState& s) {
          return goalbench::bench::ScriptedAction(s, task);
        };
      }
      std::vector<goalbench::envsim::TrajectoryRow> rows;
      const auto outcome = goalbench::bench::RunEpisode(policy, config.task,
                                                        config.seed, &rows);
      if (rollout_out.empty()) {
        goalbench::envsim::WriteTrajectoryCsv(std::cout, rows);
      } else {
        goalbench::envsim::WriteTrajectoryCsv(
            std::filesystem::path(rollout_out), rows);
      }
      fmt::print(stderr, "success {} return {:.2f} length {}\n",
                 outcome.success, outcome.episode_return, outcome.length);
    } else if (*print_config) {
      fmt::print("{}", goalbench::bench::FormatRunConfig(print_flags.Build()));
    }
  } catch (const std::exception& e) {
    fmt::print(stderr, "goalbench: error: {}\n", e.what());
    return 1;
  }
  return 0;
}
