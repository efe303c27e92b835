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

#ifndef GOALBENCH_AGENTS_HYPERPARAMS_H_
#define GOALBENCH_AGENTS_HYPERPARAMS_H_

#include <cmath>
#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

namespace goalbench::agents {

enum class Algorithm { kDdpg, kSac, kTqc };

std::string_view AlgorithmName(Algorithm algo);  // "ddpg", "sac", "tqc"
Algorithm ParseAlgorithm(std::string_view name);

struct AlgoHyperParams {
  double gamma = 0.95;
  double learning_rate = 1e-3;
  double polyak_tau = 0.05;
  std::size_t batch_size = 512;
  // Gaussian exploration noise added after the policy output. For SAC and
  // TQC it is stacked on the stochastic sample unless disabled.
  double action_noise_std = 0.2;
  bool noise_on_stochastic_policy = true;
  std::size_t policy_delay = 1;  // DDPG critic updates per actor update
  // NaN selects -action_dim.
  double entropy_target = std::numeric_limits<double>::quiet_NaN();
  double initial_log_alpha = 0.0;
  std::vector<std::size_t> hidden_sizes = {256, 256, 256};
  std::size_t n_critics = 2;
  std::size_t n_quantiles = 25;
  std::size_t drop_per_critic = 2;

  void Validate() const;
  double EntropyTarget(std::size_t action_dim) const {
    return std::isnan(entropy_target) ? -static_cast<double>(action_dim)
                                      : entropy_target;
  }
};

struct AgentDims {
  std::size_t obs_dim = 0;
  std::size_t goal_dim = 3;
  std::size_t action_dim = 0;

  std::size_t input_dim() const { return obs_dim + goal_dim; }
  friend bool operator==(const AgentDims&, const AgentDims&) = default;
};

}  // namespace goalbench::agents

#endif  // GOALBENCH_AGENTS_HYPERPARAMS_H_
