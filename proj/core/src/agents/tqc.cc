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

#include "goalbench/agents/tqc.h"

#include <cmath>
#include <numeric>
#include <string>

#include "goalbench/agents/losses.h"
#include "goalbench/agents/sac.h"
#include "goalbench/error.h"
#include "goalbench/numerics/polyak.h"

namespace goalbench::agents {

TqcAgent::TqcAgent(const AgentDims& dims, const AlgoHyperParams& params,
                   std::uint64_t seed)
    : Agent(Algorithm::kTqc, dims, params),
      actor_(LayerSizes(dims.input_dim(), params.hidden_sizes,
                        2 * dims.action_dim),
             numerics::Activation::kIdentity),
      fractions_(QuantileFractions(params.n_quantiles)) {
  std::mt19937_64 rng(seed);
  actor_.InitializeUniform(rng);
  const numerics::AdamConfig adam{params_.learning_rate};
  actor_adam_ = numerics::AdamState(actor_.num_parameters(), adam);
  for (std::size_t n = 0; n < params_.n_critics; ++n) {
    numerics::Mlp critic(LayerSizes(dims.input_dim() + dims.action_dim,
                                    params.hidden_sizes, params.n_quantiles),
                         numerics::Activation::kIdentity);
    critic.InitializeUniform(rng);
    critic_adams_.emplace_back(critic.num_parameters(), adam);
    target_critics_.push_back(critic);
    critics_.push_back(std::move(critic));
  }
}

std::vector<double> TqcAgent::SelectAction(std::span<const double> input,
                                           bool explore,
                                           std::mt19937_64& rng) const {
  CheckInput(input);
  return StochasticPolicyAction(actor_, input, explore,
                                params_.action_noise_std,
                                params_.noise_on_stochastic_policy, rng);
}

UpdateDiagnostics TqcAgent::Update(const replay::Minibatch& batch,
                                   std::mt19937_64& rng) {
  UpdateDiagnostics diag;
  const double alpha = std::exp(log_alpha_);
  const std::size_t rows = batch.size();
  const std::size_t action_dim = dims_.action_dim;

  const auto next_noise = StandardNormalMatrix(rows, action_dim, rng);
  const DenseMatrix targets =
      TqcTargets(batch, target_critics_, actor_, alpha, params_.gamma,
                 params_.drop_per_critic, next_noise);
  const auto flat = targets.data();
  diag.target_mean = std::accumulate(flat.begin(), flat.end(), 0.0) / flat.size();

  for (std::size_t n = 0; n < critics_.size(); ++n) {
    LossGradient loss = TqcCriticLoss(batch, critics_[n], targets, fractions_);
    if (!std::isfinite(loss.loss)) {
      throw NonFiniteError("tqc: critic loss is not finite at update " +
                           std::to_string(update_count_));
    }
    numerics::AdamStep(critics_[n].parameters(), loss.gradient, critic_adams_[n]);
    diag.critic_loss += loss.loss / critics_.size();
  }

  const auto noise = StandardNormalMatrix(rows, action_dim, rng);
  PolicyLossGradient actor_loss = TqcActorLoss(batch, actor_, critics_, alpha, noise);
  if (!std::isfinite(actor_loss.loss)) {
    throw NonFiniteError("tqc: actor loss is not finite at update " +
                         std::to_string(update_count_));
  }
  numerics::AdamStep(actor_.parameters(), actor_loss.gradient, actor_adam_);
  diag.actor_loss = actor_loss.loss;
  diag.actor_updated = true;

  const ScalarLossGradient alpha_loss = AlphaLoss(
      actor_loss.log_probs, log_alpha_, params_.EntropyTarget(action_dim));
  const double alpha_grad[1] = {alpha_loss.gradient};
  numerics::AdamStep(std::span<double>(&log_alpha_, 1), alpha_grad, alpha_adam_);
  diag.alpha_loss = alpha_loss.loss;
  diag.alpha = std::exp(log_alpha_);

  for (std::size_t n = 0; n < critics_.size(); ++n) {
    numerics::PolyakUpdate(target_critics_[n].parameters(),
                           critics_[n].parameters(), params_.polyak_tau);
  }
  ++update_count_;
  return diag;
}

std::vector<NetworkSlot> TqcAgent::Slots() const {
  std::vector<NetworkSlot> slots{{"actor", &actor_, &actor_adam_}};
  for (std::size_t n = 0; n < critics_.size(); ++n) {
    slots.push_back({"critic_" + std::to_string(n), &critics_[n], &critic_adams_[n]});
  }
  for (std::size_t n = 0; n < critics_.size(); ++n) {
    slots.push_back({"critic_target_" + std::to_string(n), &target_critics_[n], nullptr});
  }
  return slots;
}

std::vector<MutableNetworkSlot> TqcAgent::MutableSlots() {
  std::vector<MutableNetworkSlot> slots{{"actor", &actor_, &actor_adam_}};
  for (std::size_t n = 0; n < critics_.size(); ++n) {
    slots.push_back({"critic_" + std::to_string(n), &critics_[n], &critic_adams_[n]});
  }
  for (std::size_t n = 0; n < critics_.size(); ++n) {
    slots.push_back({"critic_target_" + std::to_string(n), &target_critics_[n], nullptr});
  }
  return slots;
}

}  // namespace goalbench::agents
