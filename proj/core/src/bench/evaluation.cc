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

#include "goalbench/bench/evaluation.h"

#include <cmath>
#include <random>

#include <fmt/format.h>

#include "goalbench/envsim/tabletop_env.h"
#include "goalbench/error.h"

namespace goalbench::bench {

EpisodeOutcome RunEpisode(const Policy& policy, const envsim::TaskConfig& task,
                          std::uint64_t seed,
                          std::vector<envsim::TrajectoryRow>* trajectory) {
  auto [state, obs] = envsim::Reset(task, seed);
  EpisodeOutcome out;
  while (!state.episode_over) {
    const std::vector<double> action = policy(obs, state);
    envsim::StepResult r = envsim::Step(state, action, task);
    out.episode_return += r.reward;
    out.success = out.success || r.success;
    out.length += 1;
    if (trajectory != nullptr) {
      trajectory->push_back(envsim::MakeTrajectoryRow(state, r));
    }
    obs = std::move(r.observation);
  }
  return out;
}

EvalRecord EvaluatePolicy(const Policy& policy, const envsim::TaskConfig& task,
                          std::size_t n_episodes, std::uint64_t seed) {
  if (n_episodes == 0) throw ContractViolation("Evaluate: zero episodes");
  std::mt19937_64 seeds(seed);
  std::size_t successes = 0;
  double total_return = 0.0;
  for (std::size_t e = 0; e < n_episodes; ++e) {
    const EpisodeOutcome o = RunEpisode(policy, task, seeds());
    successes += o.success ? 1 : 0;
    total_return += o.episode_return;
  }
  EvalRecord r;
  r.success_rate = static_cast<double>(successes) / n_episodes;
  r.mean_return = total_return / n_episodes;
  return r;
}

Policy GreedyPolicy(const agents::Agent& agent) {
  return [&agent](const envsim::GoalObservation& obs, const envsim::EnvState&) {
    std::vector<double> input = obs.observation;
    input.insert(input.end(), obs.desired_goal.begin(), obs.desired_goal.end());
    std::mt19937_64 unused(0);
    return agent.SelectAction(input, /*explore=*/false, unused);
  };
}

EvalRecord Evaluate(const agents::Agent& agent, const envsim::TaskConfig& task,
                    std::size_t n_episodes, std::uint64_t seed) {
  return EvaluatePolicy(GreedyPolicy(agent), task, n_episodes, seed);
}

std::string SuccessSummary::Format() const {
  return fmt::format("{:.1f} ± {:.1f}", mean_percent, std_percent);
}

SuccessSummary SummarizeOutcomes(const std::vector<bool>& successes) {
  SuccessSummary s;
  s.episodes = successes.size();
  if (successes.empty()) return s;
  for (bool ok : successes) s.successes += ok ? 1 : 0;
  const double p = static_cast<double>(s.successes) / s.episodes;
  s.mean_percent = 100.0 * p;
  s.std_percent = 100.0 * std::sqrt(p * (1.0 - p));
  return s;
}

SuccessSummary FinalTest(const agents::Agent& agent,
                         const envsim::TaskConfig& task,
                         std::size_t n_episodes, std::uint64_t seed) {
  if (n_episodes == 0) throw ContractViolation("FinalTest: zero episodes");
  const Policy policy = GreedyPolicy(agent);
  std::mt19937_64 seeds(seed);
  std::vector<bool> outcomes;
  outcomes.reserve(n_episodes);
  for (std::size_t e = 0; e < n_episodes; ++e) {
    outcomes.push_back(RunEpisode(policy, task, seeds()).success);
  }
  return SummarizeOutcomes(outcomes);
}

}  // namespace goalbench::bench
