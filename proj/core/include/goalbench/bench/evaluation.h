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

#ifndef GOALBENCH_BENCH_EVALUATION_H_
#define GOALBENCH_BENCH_EVALUATION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "goalbench/agents/agent.h"
#include "goalbench/envsim/trajectory.h"
#include "goalbench/envsim/types.h"

namespace goalbench::bench {

struct EvalRecord {
  std::size_t step = 0;
  double success_rate = 0.0;
  double mean_return = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const EvalRecord&, const EvalRecord&) = default;
};

using Policy = std::function<std::vector<double>(
    const envsim::GoalObservation&, const envsim::EnvState&)>;

struct EpisodeOutcome {
  bool success = false;
  double episode_return = 0.0;
  int length = 0;
};

// Runs one episode from Reset(seed). When `trajectory` is non-null, one row
// per step is appended.
EpisodeOutcome RunEpisode(const Policy& policy, const envsim::TaskConfig& task,
                          std::uint64_t seed,
                          std::vector<envsim::TrajectoryRow>* trajectory = nullptr);

// Runs `n_episodes` whose reset seeds are drawn from a stream seeded by
// `seed`. An episode counts as successful if the object reaches the goal at
// any step before the horizon.
EvalRecord EvaluatePolicy(const Policy& policy, const envsim::TaskConfig& task,
                          std::size_t n_episodes, std::uint64_t seed);

// Greedy (exploration-free) policy of `agent`.
Policy GreedyPolicy(const agents::Agent& agent);

EvalRecord Evaluate(const agents::Agent& agent, const envsim::TaskConfig& task,
                    std::size_t n_episodes, std::uint64_t seed);

struct SuccessSummary {
  std::size_t episodes = 0;
  std::size_t successes = 0;
  double mean_percent = 0.0;
  double std_percent = 0.0;  // population std of per-episode 0/100 outcomes

  std::string Format() const;  // "100.0 ± 0.0"
};

SuccessSummary SummarizeOutcomes(const std::vector<bool>& successes);

// Tests the greedy policy of `agent` over `n_episodes` fresh episodes.
SuccessSummary FinalTest(const agents::Agent& agent,
                         const envsim::TaskConfig& task,
                         std::size_t n_episodes, std::uint64_t seed);

}  // namespace goalbench::bench

#endif  // GOALBENCH_BENCH_EVALUATION_H_
