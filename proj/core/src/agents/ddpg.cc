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

#include "goalbench/agents/ddpg.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "goalbench/agents/losses.h"
#include "goalbench/error.h"
#include "goalbench/numerics/polyak.h"

namespace goalbench::agents {
DdpgAgent::DdpgAgent(const AgentDims& dims, const AlgoHyperParams& params,
                     std::uint64_t seed)
    : Agent(Algorithm::kDdpg, dims, params),
      actor_(LayerSizes(dims.input_dim(), params.hidden_sizes, dims.action_dim),
             numerics::Activation::kTanh),
      critic_(LayerSizes(dims.input_dim() + dims.action_dim, params.hidden_sizes, 1),
              numerics::Activation::kIdentity) {
  std::mt19937_64 rng(seed);
  actor_.InitializeUniform(rng);
  critic_.InitializeUniform(rng);
  target_actor_ = actor_;
  target_critic_ = critic_;
  const numerics::AdamConfig adam{params_.learning_rate};
  actor_adam_ = numerics::AdamState(actor_.num_parameters(), adam);
  critic_adam_ = numerics::AdamState(critic_.num_parameters(), adam);
}

std::vector<double> DdpgAgent::SelectAction(std::span<const double> input,
                                            bool explore,
                                            std::mt19937_64& rng) const {
  CheckInput(input);
  std::vector<double> action = actor_.Forward(input);
  if (explore && params_.action_noise_std > 0.0) {
    std::normal_distribution<double> noise(0.0, params_.action_noise_std);
    for (double& a : action) a = std::clamp(a + noise(rng), -1.0, 1.0);
  }
  return action;
}

UpdateDiagnostics DdpgAgent::Update(const replay::Minibatch& batch,
                                    std::mt19937_64& /*rng*/) {
  UpdateDiagnostics diag;
  const std::vector<double> targets =
      DdpgTarget(batch, target_actor_, target_critic_, params_.gamma);
  diag.target_mean =
      std::accumulate(targets.begin(), targets.end(), 0.0) / targets.size();

  LossGradient critic_loss = MseCriticLoss(batch, critic_, targets);
  if (!std::isfinite(critic_loss.loss)) {
    throw NonFiniteError("ddpg: critic loss is not finite at update " +
                         std::to_string(update_count_));
  }
  numerics::AdamStep(critic_.parameters(), critic_loss.gradient, critic_adam_);
  diag.critic_loss = critic_loss.loss;

  if (update_count_ % params_.policy_delay == 0) {
    LossGradient actor_loss = DdpgActorLoss(batch, actor_, critic_);
    if (!std::isfinite(actor_loss.loss)) {
      throw NonFiniteError("ddpg: actor loss is not finite at update " +
                           std::to_string(update_count_));
    }
    numerics::AdamStep(actor_.parameters(), actor_loss.gradient, actor_adam_);
    diag.actor_loss = actor_loss.loss;
    diag.actor_updated = true;
    numerics::PolyakUpdate(target_critic_.parameters(), critic_.parameters(),
                           params_.polyak_tau);
    numerics::PolyakUpdate(target_actor_.parameters(), actor_.parameters(),
                           params_.polyak_tau);
  }
  ++update_count_;
  return diag;
}

std::vector<NetworkSlot> DdpgAgent::Slots() const {
  return {{"actor", &actor_, &actor_adam_},
          {"critic", &critic_, &critic_adam_},
          {"actor_target", &target_actor_, nullptr},
          {"critic_target", &target_critic_, nullptr}};
}

std::vector<MutableNetworkSlot> DdpgAgent::MutableSlots() {
  return {{"actor", &actor_, &actor_adam_},
          {"critic", &critic_, &critic_adam_},
          {"actor_target", &target_actor_, nullptr},
          {"critic_target", &target_critic_, nullptr}};
}

}  // namespace goalbench::agents
