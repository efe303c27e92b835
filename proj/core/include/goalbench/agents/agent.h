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

#ifndef GOALBENCH_AGENTS_AGENT_H_
#define GOALBENCH_AGENTS_AGENT_H_

#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "goalbench/agents/hyperparams.h"
#include "goalbench/numerics/adam.h"
#include "goalbench/numerics/mlp.h"
#include "goalbench/replay/replay_buffer.h"

namespace goalbench::agents {

struct UpdateDiagnostics {
  double critic_loss = 0.0;  // mean over critics
  double actor_loss = std::numeric_limits<double>::quiet_NaN();
  bool actor_updated = false;
  double alpha = 0.0;
  double alpha_loss = std::numeric_limits<double>::quiet_NaN();
  double target_mean = 0.0;  // mean bootstrap target (or target atom)
};

struct NetworkSlot {
  std::string name;
  const numerics::Mlp* net = nullptr;
  const numerics::AdamState* adam = nullptr;  // null for target networks
};

struct MutableNetworkSlot {
  std::string name;
  numerics::Mlp* net = nullptr;
  numerics::AdamState* adam = nullptr;
};

// Common act/update interface of the off-policy learners. Inputs are the
// flat observation followed by the desired goal.
class Agent {
 public:
  Agent(Algorithm algorithm, AgentDims dims, AlgoHyperParams params);
  virtual ~Agent() = default;

  Algorithm algorithm() const { return algorithm_; }
  const AgentDims& dims() const { return dims_; }
  const AlgoHyperParams& hyper_params() const { return params_; }
  std::uint64_t update_count() const { return update_count_; }

  // Exploration adds the configured noise; evaluation is deterministic.
  virtual std::vector<double> SelectAction(std::span<const double> input,
                                           bool explore,
                                           std::mt19937_64& rng) const = 0;

  // One gradient step on every learned quantity, then the target networks'
  // polyak update. Throws NonFiniteError when a loss or gradient diverges.
  virtual UpdateDiagnostics Update(const replay::Minibatch& batch,
                                   std::mt19937_64& rng) = 0;

  virtual std::vector<NetworkSlot> Slots() const = 0;
  virtual std::vector<MutableNetworkSlot> MutableSlots() = 0;

  // Entropy temperature (SAC and TQC; zero-valued for DDPG).
  double log_alpha() const { return log_alpha_; }
  const numerics::AdamState& alpha_adam() const { return alpha_adam_; }

 protected:
  friend class CheckpointAccess;

  void CheckInput(std::span<const double> input) const;

  Algorithm algorithm_;
  AgentDims dims_;
  AlgoHyperParams params_;
  std::uint64_t update_count_ = 0;
  double log_alpha_ = 0.0;
  numerics::AdamState alpha_adam_;
};

// Builds an agent with freshly initialized networks; targets start as exact
// copies of their online networks.
std::unique_ptr<Agent> MakeAgent(Algorithm algorithm, const AgentDims& dims,
                                 const AlgoHyperParams& params,
                                 std::uint64_t seed);

// [in, hidden..., out]
std::vector<std::size_t> LayerSizes(std::size_t in,
                                    const std::vector<std::size_t>& hidden,
                                    std::size_t out);

// Fills a (rows x cols) matrix with standard normal draws.
numerics::DenseMatrix StandardNormalMatrix(std::size_t rows, std::size_t cols,
                                           std::mt19937_64& rng);

}  // namespace goalbench::agents

#endif  // GOALBENCH_AGENTS_AGENT_H_
