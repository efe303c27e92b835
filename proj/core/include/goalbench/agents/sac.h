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

#ifndef GOALBENCH_AGENTS_SAC_H_
#define GOALBENCH_AGENTS_SAC_H_

#include <array>

#include "goalbench/agents/agent.h"

namespace goalbench::agents {

// Tanh-Gaussian actor, twin critics with targets, learned temperature.
class SacAgent : public Agent {
 public:
  SacAgent(const AgentDims& dims, const AlgoHyperParams& params,
           std::uint64_t seed);

  std::vector<double> SelectAction(std::span<const double> input, bool explore,
                                   std::mt19937_64& rng) const override;
  UpdateDiagnostics Update(const replay::Minibatch& batch,
                           std::mt19937_64& rng) override;
  std::vector<NetworkSlot> Slots() const override;
  std::vector<MutableNetworkSlot> MutableSlots() override;

  const numerics::Mlp& actor() const { return actor_; }
  std::span<const numerics::Mlp> critics() const { return critics_; }
  std::span<const numerics::Mlp> target_critics() const {
    return target_critics_;
  }

 private:
  numerics::Mlp actor_;
  std::array<numerics::Mlp, 2> critics_, target_critics_;
  numerics::AdamState actor_adam_;
  std::array<numerics::AdamState, 2> critic_adams_;
};

// Stochastic-policy action shared by SAC and TQC.
std::vector<double> StochasticPolicyAction(const numerics::Mlp& actor,
                                           std::span<const double> input,
                                           bool explore, double noise_std,
                                           bool add_gaussian_noise,
                                           std::mt19937_64& rng);

}  // namespace goalbench::agents

#endif  // GOALBENCH_AGENTS_SAC_H_
