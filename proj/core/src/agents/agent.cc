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

#include "goalbench/agents/agent.h"

#include <string>

#include "goalbench/agents/ddpg.h"
#include "goalbench/agents/sac.h"
#include "goalbench/agents/tqc.h"
#include "goalbench/error.h"

namespace goalbench::agents {

std::string_view AlgorithmName(Algorithm algo) {
  switch (algo) {
    case Algorithm::kDdpg:
      return "ddpg";
    case Algorithm::kSac:
      return "sac";
    case Algorithm::kTqc:
      return "tqc";
  }
  return "unknown";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "ddpg") return Algorithm::kDdpg;
  if (name == "sac") return Algorithm::kSac;
  if (name == "tqc") return Algorithm::kTqc;
  throw ContractViolation("unknown algorithm '" + std::string(name) +
                          "' (expected ddpg, sac or tqc)");
}

void AlgoHyperParams::Validate() const {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ContractViolation("gamma must lie in [0, 1]");
  }
  if (!(learning_rate > 0.0)) throw ContractViolation("learning_rate must be > 0");
  if (!(polyak_tau >= 0.0 && polyak_tau <= 1.0)) {
    throw ContractViolation("polyak_tau must lie in [0, 1]");
  }
  if (batch_size == 0) throw ContractViolation("batch_size must be positive");
  if (!(action_noise_std >= 0.0)) {
    throw ContractViolation("action_noise_std must be non-negative");
  }
  if (policy_delay == 0) throw ContractViolation("policy_delay must be positive");
  if (hidden_sizes.empty()) throw ContractViolation("need at least one hidden layer");
  if (n_critics == 0) throw ContractViolation("n_critics must be positive");
  if (n_quantiles == 0) throw ContractViolation("n_quantiles must be positive");
  if (drop_per_critic >= n_quantiles) {
    throw ContractViolation("drop_per_critic must be below n_quantiles");
  }
}

Agent::Agent(Algorithm algorithm, AgentDims dims, AlgoHyperParams params)
    : algorithm_(algorithm),
      dims_(dims),
      params_(std::move(params)),
      log_alpha_(params_.initial_log_alpha),
      alpha_adam_(1, numerics::AdamConfig{params_.learning_rate}) {
  params_.Validate();
  if (dims_.obs_dim == 0 || dims_.action_dim == 0) {
    throw ContractViolation("agent dimensions must be positive");
  }
}

void Agent::CheckInput(std::span<const double> input) const {
  if (input.size() != dims_.input_dim()) {
    throw ContractViolation("agent input length " + std::to_string(input.size()) +
                            " != " + std::to_string(dims_.input_dim()));
  }
}

std::unique_ptr<Agent> MakeAgent(Algorithm algorithm, const AgentDims& dims,
                                 const AlgoHyperParams& params,
                                 std::uint64_t seed) {
  switch (algorithm) {
    case Algorithm::kDdpg:
      return std::make_unique<DdpgAgent>(dims, params, seed);
    case Algorithm::kSac:
      return std::make_unique<SacAgent>(dims, params, seed);
    case Algorithm::kTqc:
      return std::make_unique<TqcAgent>(dims, params, seed);
  }
  throw ContractViolation("unknown algorithm");
}

std::vector<std::size_t> LayerSizes(std::size_t in,
                                    const std::vector<std::size_t>& hidden,
                                    std::size_t out) {
  std::vector<std::size_t> sizes{in};
  sizes.insert(sizes.end(), hidden.begin(), hidden.end());
  sizes.push_back(out);
  return sizes;
}

numerics::DenseMatrix StandardNormalMatrix(std::size_t rows, std::size_t cols,
                                           std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  numerics::DenseMatrix m(rows, cols);
  for (double& v : m.data()) v = normal(rng);
  return m;
}

}  // namespace goalbench::agents
