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

#ifndef GOALBENCH_BENCH_RUN_CONFIG_H_
#define GOALBENCH_BENCH_RUN_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

#include "goalbench/agents/hyperparams.h"
#include "goalbench/envsim/env_config_io.h"
#include "goalbench/envsim/types.h"

namespace goalbench::bench {

struct RunConfig {
  envsim::TaskConfig task;
  agents::Algorithm algorithm = agents::Algorithm::kTqc;
  std::uint64_t seed = 0;
  std::size_t total_steps = 500000;
  std::size_t eval_interval = 2000;
  std::size_t eval_episodes = 50;
  std::size_t final_test_episodes = 20;
  std::size_t buffer_capacity = 1000000;
  std::size_t her_k = 4;
  std::size_t warmup_steps = 1000;
  agents::AlgoHyperParams agent;
  std::filesystem::path output_dir = "runs";

  void Validate() const;
};

// Published training protocol: [256, 256, 256] networks and batch 512 with
// 5e5 steps for push and pick; [512, 512, 512], batch 2048 and 1e6 steps for
// slide.
RunConfig DefaultRunConfig(envsim::TaskKind task, agents::Algorithm algorithm);

// Applies run keys on top of `config`:
//   algo, seed, steps, eval_interval, eval_episodes, final_test_episodes,
//   buffer_size, her_k, warmup_steps, batch_size, hidden_sizes ("64 64"),
//   learning_rate, gamma, polyak_tau, action_noise_std,
//   noise_on_stochastic_policy (true|false), policy_delay, n_critics,
//   n_quantiles, drop_per_critic, initial_log_alpha, out
// plus every task key understood by TaskConfigFromKeyValues. A `task` key
// resets the task block and the task-dependent defaults. Unknown keys throw
// FormatError.
void ApplyKeyValues(envsim::KeyValues values, RunConfig& config);
RunConfig LoadRunConfig(const std::filesystem::path& path);

std::string FormatRunConfig(const RunConfig& config);

}  // namespace goalbench::bench

#endif  // GOALBENCH_BENCH_RUN_CONFIG_H_
