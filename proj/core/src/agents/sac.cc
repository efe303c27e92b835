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

#include "goalbench/agents/sac.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "goalbench/agents/losses.h"
#include "goalbench/error.h"
#include "goalbench/numerics/polyak.h"
#include "goalbench/numerics/squashed_gaussian.h"

namespace goalbench::agents {

std::vector<double> StochasticPolicyAction(const numerics::Mlp& actor,
                                           std::span<const double> input,
                                           bool explore, double noise_std,
                                           bool add_gaussian_noise,
                                           std::mt19937_64& rng) {
  const std::vector<double> head = actor.Forward(input);
  const std::size_t action_dim = head.size() / 2;
  const std::span<const double> mean(head.data(), action_dim);
  std::vector<double> action(action_dim);
  if (!explore) {
    for (std::size_t i = 0; i < action_dim; ++i) action[i] = std::tanh(mean[i]);
    return action;
  }
  std::normal_distribution<double> standard(0.0, 1.0);
  std::vector<double> noise(action_dim);
  for (double& n : noise) n = standard(rng);
  numerics::SampleSquashedGaussianInto(
      mean, std::span<const double>(head.data() + action_dim, action_dim),
      noise, action);
  if (add_gaussian_noise && noise_std > 0.0) {
    std::normal_distribution<double> extra(0.0, noise_std);
    for (double& a : action) a = std::clamp(a + extra(rng), -1.0, 1.0);
  }
  return action;
}

SacAgent::SacAgent(const AgentDims& dims, const AlgoHyperParams& params,
                   std::uint64_t seed)
    : Agent(Algorithm::kSac, dims, params),
      actor_(LayerSizes(dims.input_dim(), params.hidden_sizes,
                        2 * dims.action_dim),
             numerics::Activation::kIdentity) {
  std::mt19937_64 rng(seed);
  actor_.InitializeUniform(rng);
  const numerics::AdamConfig adam{params_.learning_rate};
  actor_adam_ = numerics::AdamState(actor_.num_parameters(), adam);
  for (std::size_t j = 0; j < critics_.size(); ++j) {
    critics_[j] = numerics::Mlp(
        LayerSizes(dims.input_dim() + dims.action_dim, params.hidden_sizes, 1),
        numerics::Activation::kIdentity);
    critics_[j].InitializeUniform(rng);
    target_critics_[j] = critics_[j];
    critic_adams_[j] = numerics::AdamState(critics_[j].num_parameters(), adam);
  }
}

std::vector<double> SacAgent::SelectAction(std::span<const double> input,
                                           bool explore,
                                           std::mt19937_64& rng) const {
  CheckInput(input);
  return StochasticPolicyAction(actor_, input, explore,
                                params_.action_noise_std,
                                params_.noise_on_stochastic_policy, rng);
}

UpdateDiagnostics SacAgent::Update(const replay::Minibatch& batch,
                                   std::mt19937_64& rng) {
  UpdateDiagnostics diag;
  const double alpha = std::exp(log_alpha_);
  const std::size_t rows = batch.size();
  const std::size_t action_dim = dims_.action_dim;

  const auto next_noise = StandardNormalMatrix(rows, action_dim, rng);
  const std::vector<double> targets = SacTarget(
      batch, target_critics_, actor_, alpha, params_.gamma, next_noise);
  diag.target_mean =
      std::accumulate(targets.begin(), targets.end(), 0.0) / rows;

  for (std::size_t j = 0; j < critics_.size(); ++j) {
    LossGradient loss = MseCriticLoss(batch, critics_[j], targets);
    if (!std::isfinite(loss.loss)) {
      throw NonFiniteError("sac: critic loss is not finite at update " +
                           std::to_string(update_count_));
    }
    numerics::AdamStep(critics_[j].parameters(), loss.gradient, critic_adams_[j]);
    diag.critic_loss += loss.loss / critics_.size();
  }

  const auto noise = StandardNormalMatrix(rows, action_dim, rng);
  PolicyLossGradient actor_loss = SacActorLoss(batch, actor_, critics_, alpha, noise);
  if (!std::isfinite(actor_loss.loss)) {
    throw NonFiniteError("sac: actor loss is not finite at update " +
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

  for (std::size_t j = 0; j < critics_.size(); ++j) {
    numerics::PolyakUpdate(target_critics_[j].parameters(),
                           critics_[j].parameters(), params_.polyak_tau);
  }
  ++update_count_;
  return diag;
}

std::vector<NetworkSlot> SacAgent::Slots() const {
  return {{"actor", &actor_, &actor_adam_},
          {"critic_0", &critics_[0], &critic_adams_[0]},
          {"critic_1", &critics_[1], &critic_adams_[1]},
          {"critic_target_0", &target_critics_[0], nullptr},
          {"critic_target_1", &target_critics_[1], nullptr}};
}

std::vector<MutableNetworkSlot> SacAgent::MutableSlots() {
  return {{"actor", &actor_, &actor_adam_},
          {"critic_0", &critics_[0], &critic_adams_[0]},
          {"critic_1", &critics_[1], &critic_adams_[1]},
          {"critic_target_0", &target_critics_[0], nullptr},
          {"critic_target_1", &target_critics_[1], nullptr}};
}

}  // namespace goalbench::agents
