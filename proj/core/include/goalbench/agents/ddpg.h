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

#ifndef GOALBENCH_AGENTS_DDPG_H_
#define GOALBENCH_AGENTS_DDPG_H_

#include "goalbench/agents/agent.h"

namespace goalbench::agents {

// Deterministic tanh actor, one critic, target copies of both.
class DdpgAgent : public Agent {
 public:
  DdpgAgent(const AgentDims& dims, const AlgoHyperParams& params,
            std::uint64_t seed);

  std::vector<double> SelectAction(std::span<const double> input, bool explore,
                                   std::mt19937_64& rng) const override;
  UpdateDiagnostics Update(const replay::Minibatch& batch,
                           std::mt19937_64& rng) override;
  std::vector<NetworkSlot> Slots() const override;
  std::vector<MutableNetworkSlot> MutableSlots() override;

  const numerics::Mlp& actor() const { return actor_; }
  const numerics::Mlp& critic() const { return critic_; }
  const numerics::Mlp& target_actor() const { return target_actor_; }
  const numerics::Mlp& target_critic() const { return target_critic_; }

 private:
  numerics::Mlp actor_, critic_, target_actor_, target_critic_;
  numerics::AdamState actor_adam_, critic_adam_;
};

}  // namespace goalbench::agents

#endif  // GOALBENCH_AGENTS_DDPG_H_
