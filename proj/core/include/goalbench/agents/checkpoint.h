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

#ifndef GOALBENCH_AGENTS_CHECKPOINT_H_
#define GOALBENCH_AGENTS_CHECKPOINT_H_

#include <filesystem>
#include <iosfwd>
#include <memory>

#include "goalbench/agents/agent.h"

namespace goalbench::agents {

// Binary layout (native little-endian):
//   "GBCK" | u32 version | u32 algorithm
//   u64 obs_dim, goal_dim, action_dim
//   hyper-parameters: f64 gamma, learning_rate, polyak_tau | u64 batch_size |
//     f64 action_noise_std | u8 noise_on_stochastic_policy | u64 policy_delay |
//     f64 entropy_target, initial_log_alpha | u64 n_hidden, hidden sizes... |
//     u64 n_critics, n_quantiles, drop_per_critic
//   u64 update_count | f64 log_alpha | adam block (temperature)
//   u64 n_networks, then per network:
//     u64 n_sizes, sizes... | u8 output activation | u64 n_params,
//     f64 params... | u8 has_adam | [adam block]
//   adam block: u64 step_count | f64 lr, beta1, beta2, epsilon | u64 n,
//     f64 first_moment[n], second_moment[n]
void SaveCheckpoint(const Agent& agent, std::ostream& out);
void SaveCheckpoint(const Agent& agent, const std::filesystem::path& path);

// Throws FormatError on a corrupt or truncated checkpoint.
std::unique_ptr<Agent> LoadCheckpoint(std::istream& in);
std::unique_ptr<Agent> LoadCheckpoint(const std::filesystem::path& path);

}  // namespace goalbench::agents

#endif  // GOALBENCH_AGENTS_CHECKPOINT_H_
