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

#include "goalbench/bench/trainer.h"

#include <cmath>
#include <fstream>
#include <random>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "goalbench/agents/checkpoint.h"
#include "goalbench/envsim/tabletop_env.h"
#include "goalbench/replay/replay_buffer.h"

namespace goalbench::bench {
namespace {

enum Stream : std::uint64_t {
  kAgentInit = 1,
  kReset,
  kAct,
  kRelabel,
  kSample,
  kUpdate,
  kEval,
  kFinalTest,
};

std::filesystem::path SummaryPath(const std::filesystem::path& dir,
                                  std::uint64_t seed) {
  return dir / fmt::format("summary_seed{}.txt", seed);
}

void WriteSummary(const std::filesystem::path& path, const RunConfig& config,
                  const std::vector<EvalRecord>& curve,
                  const SuccessSummary* final_test, const std::string& abort) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << "# run configuration\n" << FormatRunConfig(config);
  out << "# results\n";
  fmt::print(out, "evaluations = {}\n", curve.size());
  if (!curve.empty()) {
    fmt::print(out, "last_success_rate = {:.6f}\n", curve.back().success_rate);
  }
  if (final_test != nullptr) {
    fmt::print(out, "final_test_episodes = {}\n", final_test->episodes);
    fmt::print(out, "final_test_success_percent = {}\n", final_test->Format());
  }
  if (!abort.empty()) fmt::print(out, "aborted = {}\n", abort);
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over a stream-separated input
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::filesystem::path CurvePath(const std::filesystem::path& dir,
                                std::uint64_t seed) {
  return dir / fmt::format("curve_seed{}.csv", seed);
}

std::filesystem::path CheckpointPath(const std::filesystem::path& dir,
                                     std::uint64_t seed) {
  return dir / fmt::format("checkpoint_seed{}.bin", seed);
}

TrainResult Train(const RunConfig& config, const ProgressFn& progress) {
  config.Validate();
  std::filesystem::create_directories(config.output_dir);

  const envsim::TaskConfig& task = config.task;
  const agents::AgentDims dims{envsim::ObservationSize(task.task_kind),
                               envsim::kGoalSize,
                               envsim::ActionSize(task.task_kind)};
  auto agent = agents::MakeAgent(config.algorithm, dims, config.agent,
                                 DeriveSeed(config.seed, kAgentInit));
  envsim::TabletopEnv env(task);
  replay::ReplayBuffer buffer(config.buffer_capacity, dims.obs_dim,
                              dims.action_dim);
  const replay::RelabelFunctions relabel = replay::RelabelFunctionsFor(task);

  std::mt19937_64 reset_rng(DeriveSeed(config.seed, kReset));
  std::mt19937_64 act_rng(DeriveSeed(config.seed, kAct));
  std::mt19937_64 relabel_rng(DeriveSeed(config.seed, kRelabel));
  std::mt19937_64 sample_rng(DeriveSeed(config.seed, kSample));
  std::mt19937_64 update_rng(DeriveSeed(config.seed, kUpdate));
  std::mt19937_64 eval_rng(DeriveSeed(config.seed, kEval));
  std::uniform_real_distribution<double> uniform_action(-1.0, 1.0);

  TrainResult result;
  result.curve_path = CurvePath(config.output_dir, config.seed);
  result.checkpoint_path = CheckpointPath(config.output_dir, config.seed);
  result.summary_path = SummaryPath(config.output_dir, config.seed);
  CurveWriter curve(result.curve_path);

  std::vector<replay::Transition> episode;
  episode.reserve(envsim::kEpisodeLength);
  envsim::GoalObservation obs = env.Reset(reset_rng());
  std::vector<double> input(dims.input_dim());
  std::vector<double> action(dims.action_dim);
  replay::Minibatch batch;
  agents::UpdateDiagnostics diagnostics;

  std::size_t step = 0;
  try {
    for (step = 1; step <= config.total_steps; ++step) {
      if (step <= config.warmup_steps) {
        for (double& a : action) a = uniform_action(act_rng);
      } else {
        std::copy(obs.observation.begin(), obs.observation.end(),
                  input.begin());
        std::copy(obs.desired_goal.begin(), obs.desired_goal.end(),
                  input.begin() + dims.obs_dim);
        action = agent->SelectAction(input, /*explore=*/true, act_rng);
        for (double a : action) {
          if (!std::isfinite(a)) throw NonFiniteError("policy output is not finite");
        }
      }
      envsim::StepResult r = env.Step(action);
      episode.push_back({std::move(obs), action, r.reward, r.observation,
                         r.terminated, false});
      obs = std::move(r.observation);
      if (r.terminated || r.truncated) {
        replay::StoreEpisode(buffer, episode, config.her_k, relabel_rng,
                             relabel);
        episode.clear();
        obs = env.Reset(reset_rng());
      }

      if (step > config.warmup_steps &&
          buffer.size() >= config.agent.batch_size) {
        buffer.SampleBatchInto(config.agent.batch_size, sample_rng, batch);
        diagnostics = agent->Update(batch, update_rng);
      }

      if (step % config.eval_interval == 0) {
        EvalRecord rec =
            Evaluate(*agent, task, config.eval_episodes, eval_rng());
        rec.step = step;
        rec.seed = config.seed;
        result.curve.push_back(rec);
        curve.Append(rec);
        if (progress) progress(rec, diagnostics);
      }
    }
  } catch (const NonFiniteError& e) {
    const std::string reason = fmt::format("step {}: {}", step, e.what());
    agents::SaveCheckpoint(*agent, result.checkpoint_path);
    WriteSummary(result.summary_path, config, result.curve, nullptr, reason);
    throw TrainingAborted("training diverged at " + reason +
                          "; partial artifacts in " +
                          config.output_dir.string());
  }

  agents::SaveCheckpoint(*agent, result.checkpoint_path);
  if (config.final_test_episodes > 0) {
    result.final_test =
        FinalTest(*agent, task, config.final_test_episodes,
                  DeriveSeed(config.seed, kFinalTest));
  }
  WriteSummary(result.summary_path, config, result.curve,
               config.final_test_episodes > 0 ? &result.final_test : nullptr,
               "");
  std::filesystem::copy_file(result.summary_path,
                             config.output_dir / "summary.txt",
                             std::filesystem::copy_options::overwrite_existing);
  return result;
}

SweepResult Sweep(const RunConfig& config, std::size_t n_seeds,
                  const ProgressFn& progress) {
  if (n_seeds == 0) throw ContractViolation("Sweep: zero seeds");
  SweepResult out;
  std::vector<std::vector<EvalRecord>> curves;
  for (std::size_t i = 0; i < n_seeds; ++i) {
    RunConfig run = config;
    run.seed = config.seed + i;
    out.runs.push_back(Train(run, progress));
    curves.push_back(out.runs.back().curve);
  }
  out.aggregate = AggregateCurves(curves);
  out.aggregate_path = config.output_dir / "aggregate.csv";
  WriteAggregateCsv(out.aggregate_path, out.aggregate);

  out.summary_path = config.output_dir / "summary.txt";
  std::ofstream summary(out.summary_path, std::ios::binary);
  if (!summary) throw FormatError("cannot write " + out.summary_path.string());
  fmt::print(summary, "task = {}\nalgo = {}\nseeds = {}\n",
             envsim::TaskName(config.task.task_kind),
             agents::AlgorithmName(config.algorithm), n_seeds);
  std::vector<double> finals;
  for (std::size_t i = 0; i < out.runs.size(); ++i) {
    const TrainResult& run = out.runs[i];
    fmt::print(summary, "seed {} final_test_success_percent = {}\n",
               config.seed + i, run.final_test.Format());
    if (!run.curve.empty()) finals.push_back(run.curve.back().success_rate);
  }
  if (!finals.empty()) {
    fmt::print(summary, "median_last_success_rate = {:.6f}\n", Median(finals));
  }
  return out;
}

}  // namespace goalbench::bench
