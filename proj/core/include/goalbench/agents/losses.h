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

#ifndef GOALBENCH_AGENTS_LOSSES_H_
#define GOALBENCH_AGENTS_LOSSES_H_

#include <cstddef>
#include <span>
#include <vector>

#include "goalbench/numerics/dense_matrix.h"
#include "goalbench/numerics/mlp.h"
#include "goalbench/replay/replay_buffer.h"

// Loss functions of the three learners, each returning the scalar loss and
// the gradient with respect to the parameters being trained. Anything random
// (policy noise) is passed in so every loss is a deterministic function of
// its arguments.
namespace goalbench::agents {

using numerics::DenseMatrix;
using numerics::Mlp;
using replay::Minibatch;

struct LossGradient {
  double loss = 0.0;
  std::vector<double> gradient;
};

struct PolicyLossGradient {
  double loss = 0.0;
  std::vector<double> gradient;   // actor parameters
  std::vector<double> log_probs;  // one per row, for the temperature loss
};

struct ScalarLossGradient {
  double loss = 0.0;
  double gradient = 0.0;
};

// Tanh-Gaussian policy evaluated on a batch. The actor emits [mean | log_std].
struct PolicySample {
  numerics::MlpTape tape;
  DenseMatrix actions;
  std::vector<double> log_probs;
};

void SamplePolicy(const Mlp& actor, const DenseMatrix& inputs,
                  const DenseMatrix& noise, PolicySample& out);

// Accumulates actor parameter gradients given dL/d(action) and dL/d(log_prob)
// per row.
void PolicyBackward(const Mlp& actor, const PolicySample& sample,
                    const DenseMatrix& noise, const DenseMatrix& action_grad,
                    std::span<const double> log_prob_grad,
                    std::span<double> param_grads);

// Q(s, a) for every row.
std::vector<double> EvaluateCritic(const Mlp& critic, const DenseMatrix& inputs,
                                   const DenseMatrix& actions);

// ---- DDPG ----

// y = r + gamma (1 - d) Q_targ(s', pi_targ(s')).
std::vector<double> DdpgTarget(const Minibatch& batch, const Mlp& target_actor,
                               const Mlp& target_critic, double gamma);

// mean_i (Q(s_i, a_i) - y_i)^2, gradient w.r.t. the critic. Shared by all
// scalar critics (DDPG and each SAC twin).
LossGradient MseCriticLoss(const Minibatch& batch, const Mlp& critic,
                           std::span<const double> targets);

// -mean_i Q(s_i, pi(s_i)), gradient w.r.t. the actor; the critic is frozen.
LossGradient DdpgActorLoss(const Minibatch& batch, const Mlp& actor,
                           const Mlp& critic);

// ---- SAC ----

// y = r + gamma (1 - d) (min_j Q_targ,j(s', a') - alpha log pi(a'|s')) with
// a' drawn from the current actor using `next_noise`.
std::vector<double> SacTarget(const Minibatch& batch,
                              std::span<const Mlp> target_critics,
                              const Mlp& actor, double alpha, double gamma,
                              const DenseMatrix& next_noise);

// mean_i (alpha log pi(a_i|s_i) - min_j Q_j(s_i, a_i)), a_i reparameterized.
PolicyLossGradient SacActorLoss(const Minibatch& batch, const Mlp& actor,
                                std::span<const Mlp> critics, double alpha,
                                const DenseMatrix& noise);

// mean(-log_alpha (log_prob + entropy_target)); gradient w.r.t. log_alpha.
ScalarLossGradient AlphaLoss(std::span<const double> log_probs,
                             double log_alpha, double entropy_target);

// ---- TQC ----

// tau_m = (2m - 1) / (2M), m = 1..M.
std::vector<double> QuantileFractions(std::size_t n_quantiles);

// Pools the N x M atoms (critic-major), sorts ascending and keeps the
// (M - drop_per_critic) * N smallest.
std::vector<double> PoolAndTruncate(std::span<const double> atoms,
                                    std::size_t n_critics,
                                    std::size_t n_quantiles,
                                    std::size_t drop_per_critic);

// y_i = r + gamma (1 - d) (z_i - alpha log_prob_next).
std::vector<double> TqcTargetAtoms(std::span<const double> kept_atoms,
                                   double reward, double terminated,
                                   double gamma, double alpha,
                                   double log_prob_next);

double HuberLoss(double u);

// rho_tau(u) = |tau - 1(u < 0)| * Huber(u).
double HuberQuantile(double u, double tau);

// (1 / (K M)) sum_m sum_i rho_{tau_m}(y_i - theta_m) for one critic and one
// sample, K = targets.size(), M = predicted.size().
double HuberQuantileLoss(std::span<const double> predicted,
                         std::span<const double> targets,
                         std::span<const double> fractions);

// Same value, and writes d loss / d predicted into `grad`.
double HuberQuantileLossWithGrad(std::span<const double> predicted,
                                 std::span<const double> targets,
                                 std::span<const double> fractions,
                                 std::span<double> grad);

// Target atoms, one row of kN values per sample.
DenseMatrix TqcTargets(const Minibatch& batch, std::span<const Mlp> target_bank,
                       const Mlp& actor, double alpha, double gamma,
                       std::size_t drop_per_critic,
                       const DenseMatrix& next_noise);

// Batch mean of the quantile loss for one critic of the bank.
LossGradient TqcCriticLoss(const Minibatch& batch, const Mlp& critic,
                           const DenseMatrix& targets,
                           std::span<const double> fractions);

// mean_i (alpha log pi(a_i|s_i) - mean over all N M atoms at (s_i, a_i)).
PolicyLossGradient TqcActorLoss(const Minibatch& batch, const Mlp& actor,
                                std::span<const Mlp> critics, double alpha,
                                const DenseMatrix& noise);

}  // namespace goalbench::agents

#endif  // GOALBENCH_AGENTS_LOSSES_H_
