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

#include "goalbench/agents/losses.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "goalbench/error.h"
#include "goalbench/numerics/squashed_gaussian.h"

namespace goalbench::agents {
namespace {

using numerics::ConcatColumns;
using numerics::MlpTape;

void CheckBatch(const Minibatch& batch) {
  if (batch.size() == 0) throw ContractViolation("empty minibatch");
  if (batch.observations.rows() != batch.size() ||
      batch.next_observations.rows() != batch.size() ||
      batch.actions.rows() != batch.size() ||
      batch.terminated.size() != batch.size()) {
    throw ContractViolation("minibatch columns have inconsistent lengths");
  }
}

// Forward pass of a critic on [inputs | actions].
void CriticForward(const Mlp& critic, const DenseMatrix& inputs,
                   const DenseMatrix& actions, MlpTape& tape) {
  DenseMatrix joined;
  ConcatColumns(inputs, actions, joined);
  critic.Forward(joined, tape);
}

// Adds d(sum upstream . critic output)/d(action) to `action_grad`.
void AccumulateActionGrad(const Mlp& critic, const MlpTape& tape,
                          const DenseMatrix& upstream, std::size_t input_dim,
                          DenseMatrix& action_grad) {
  DenseMatrix input_grad;
  critic.Backward(tape, upstream, {}, &input_grad);
  for (std::size_t r = 0; r < action_grad.rows(); ++r) {
    const auto src = input_grad.Row(r).subspan(input_dim);
    auto dst = action_grad.Row(r);
    for (std::size_t a = 0; a < dst.size(); ++a) dst[a] += src[a];
  }
}

void CheckCritics(std::span<const Mlp> critics) {
  if (critics.empty()) throw ContractViolation("need at least one critic");
}

}  // namespace

void SamplePolicy(const Mlp& actor, const DenseMatrix& inputs,
                  const DenseMatrix& noise, PolicySample& out) {
  const std::size_t action_dim = actor.output_size() / 2;
  if (actor.output_size() != 2 * action_dim || noise.cols() != action_dim ||
      noise.rows() != inputs.rows()) {
    throw ContractViolation("SamplePolicy: actor/noise shape mismatch");
  }
  actor.Forward(inputs, out.tape);
  const DenseMatrix& head = out.tape.output();
  out.actions.Resize(inputs.rows(), action_dim);
  out.log_probs.resize(inputs.rows());
  for (std::size_t r = 0; r < inputs.rows(); ++r) {
    const auto row = head.Row(r);
    out.log_probs[r] = numerics::SampleSquashedGaussianInto(
        row.first(action_dim), row.subspan(action_dim), noise.Row(r),
        out.actions.Row(r));
  }
}

void PolicyBackward(const Mlp& actor, const PolicySample& sample,
                    const DenseMatrix& noise, const DenseMatrix& action_grad,
                    std::span<const double> log_prob_grad,
                    std::span<double> param_grads) {
  const std::size_t action_dim = actor.output_size() / 2;
  const DenseMatrix& head = sample.tape.output();
  DenseMatrix upstream(head.rows(), head.cols());
  for (std::size_t r = 0; r < head.rows(); ++r) {
    const auto row = head.Row(r);
    auto up = upstream.Row(r);
    numerics::SquashedGaussianBackward(
        row.first(action_dim), row.subspan(action_dim), noise.Row(r),
        action_grad.Row(r), log_prob_grad[r], up.first(action_dim),
        up.subspan(action_dim));
  }
  actor.Backward(sample.tape, upstream, param_grads, nullptr);
}

std::vector<double> EvaluateCritic(const Mlp& critic, const DenseMatrix& inputs,
                                   const DenseMatrix& actions) {
  MlpTape tape;
  CriticForward(critic, inputs, actions, tape);
  const auto q = tape.output().data();
  return {q.begin(), q.end()};
}

// ---- DDPG ----

std::vector<double> DdpgTarget(const Minibatch& batch, const Mlp& target_actor,
                               const Mlp& target_critic, double gamma) {
  CheckBatch(batch);
  MlpTape actor_tape;
  target_actor.Forward(batch.next_observations, actor_tape);
  const std::vector<double> q =
      EvaluateCritic(target_critic, batch.next_observations, actor_tape.output());
  std::vector<double> y(batch.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = batch.rewards[i] + gamma * (1.0 - batch.terminated[i]) * q[i];
  }
  return y;
}

LossGradient MseCriticLoss(const Minibatch& batch, const Mlp& critic,
                           std::span<const double> targets) {
  CheckBatch(batch);
  if (targets.size() != batch.size()) {
    throw ContractViolation("MseCriticLoss: target count mismatch");
  }
  MlpTape tape;
  CriticForward(critic, batch.observations, batch.actions, tape);
  const auto q = tape.output().data();
  const double n = static_cast<double>(batch.size());
  LossGradient out;
  DenseMatrix upstream(batch.size(), 1);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const double diff = q[i] - targets[i];
    out.loss += diff * diff;
    upstream(i, 0) = 2.0 * diff / n;
  }
  out.loss /= n;
  out.gradient.assign(critic.num_parameters(), 0.0);
  critic.Backward(tape, upstream, out.gradient, nullptr);
  return out;
}

LossGradient DdpgActorLoss(const Minibatch& batch, const Mlp& actor,
                           const Mlp& critic) {
  CheckBatch(batch);
  MlpTape actor_tape;
  actor.Forward(batch.observations, actor_tape);
  MlpTape critic_tape;
  CriticForward(critic, batch.observations, actor_tape.output(), critic_tape);
  const auto q = critic_tape.output().data();
  const double n = static_cast<double>(batch.size());

  LossGradient out;
  for (double v : q) out.loss -= v;
  out.loss /= n;

  DenseMatrix upstream(batch.size(), 1, -1.0 / n);
  DenseMatrix action_grad(batch.size(), actor.output_size());
  AccumulateActionGrad(critic, critic_tape, upstream, batch.observations.cols(),
                       action_grad);
  out.gradient.assign(actor.num_parameters(), 0.0);
  actor.Backward(actor_tape, action_grad, out.gradient, nullptr);
  return out;
}

// ---- SAC ----

std::vector<double> SacTarget(const Minibatch& batch,
                              std::span<const Mlp> target_critics,
                              const Mlp& actor, double alpha, double gamma,
                              const DenseMatrix& next_noise) {
  CheckBatch(batch);
  CheckCritics(target_critics);
  PolicySample next;
  SamplePolicy(actor, batch.next_observations, next_noise, next);
  std::vector<double> min_q;
  for (const Mlp& critic : target_critics) {
    const auto q = EvaluateCritic(critic, batch.next_observations, next.actions);
    if (min_q.empty()) {
      min_q = q;
    } else {
      for (std::size_t i = 0; i < q.size(); ++i) min_q[i] = std::min(min_q[i], q[i]);
    }
  }
  std::vector<double> y(batch.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = batch.rewards[i] + gamma * (1.0 - batch.terminated[i]) *
                                  (min_q[i] - alpha * next.log_probs[i]);
  }
  return y;
}

PolicyLossGradient SacActorLoss(const Minibatch& batch, const Mlp& actor,
                                std::span<const Mlp> critics, double alpha,
                                const DenseMatrix& noise) {
  CheckBatch(batch);
  CheckCritics(critics);
  const std::size_t rows = batch.size();
  const double n = static_cast<double>(rows);
  PolicySample sample;
  SamplePolicy(actor, batch.observations, noise, sample);

  std::vector<MlpTape> tapes(critics.size());
  std::vector<double> min_q(rows);
  std::vector<std::size_t> argmin(rows, 0);
  for (std::size_t j = 0; j < critics.size(); ++j) {
    CriticForward(critics[j], batch.observations, sample.actions, tapes[j]);
    const auto q = tapes[j].output().data();
    for (std::size_t i = 0; i < rows; ++i) {
      if (j == 0 || q[i] < min_q[i]) {
        min_q[i] = q[i];
        argmin[i] = j;
      }
    }
  }

  PolicyLossGradient out;
  for (std::size_t i = 0; i < rows; ++i) {
    out.loss += alpha * sample.log_probs[i] - min_q[i];
  }
  out.loss /= n;

  DenseMatrix action_grad(rows, sample.actions.cols());
  for (std::size_t j = 0; j < critics.size(); ++j) {
    DenseMatrix upstream(rows, 1);
    bool any = false;
    for (std::size_t i = 0; i < rows; ++i) {
      if (argmin[i] == j) {
        upstream(i, 0) = -1.0 / n;
        any = true;
      }
    }
    if (any) {
      AccumulateActionGrad(critics[j], tapes[j], upstream,
                           batch.observations.cols(), action_grad);
    }
  }
  const std::vector<double> log_prob_grad(rows, alpha / n);
  out.gradient.assign(actor.num_parameters(), 0.0);
  PolicyBackward(actor, sample, noise, action_grad, log_prob_grad, out.gradient);
  out.log_probs = std::move(sample.log_probs);
  return out;
}

ScalarLossGradient AlphaLoss(std::span<const double> log_probs,
                             double log_alpha, double entropy_target) {
  if (log_probs.empty()) throw ContractViolation("AlphaLoss: no log-probs");
  double mean = 0.0;
  for (double lp : log_probs) mean += lp + entropy_target;
  mean /= static_cast<double>(log_probs.size());
  return {-log_alpha * mean, -mean};
}

// ---- TQC ----

std::vector<double> QuantileFractions(std::size_t n_quantiles) {
  if (n_quantiles == 0) throw ContractViolation("QuantileFractions: M = 0");
  std::vector<double> tau(n_quantiles);
  const double m = static_cast<double>(n_quantiles);
  for (std::size_t i = 0; i < n_quantiles; ++i) {
    tau[i] = (2.0 * static_cast<double>(i) + 1.0) / (2.0 * m);
  }
  return tau;
}

std::vector<double> PoolAndTruncate(std::span<const double> atoms,
                                    std::size_t n_critics,
                                    std::size_t n_quantiles,
                                    std::size_t drop_per_critic) {
  if (atoms.size() != n_critics * n_quantiles) {
    throw ContractViolation("PoolAndTruncate: expected N * M atoms");
  }
  if (drop_per_critic >= n_quantiles) {
    throw ContractViolation("PoolAndTruncate: drop_per_critic (" +
                            std::to_string(drop_per_critic) +
                            ") must be below the quantile count (" +
                            std::to_string(n_quantiles) + ")");
  }
  std::vector<double> pooled(atoms.begin(), atoms.end());
  const std::size_t keep = (n_quantiles - drop_per_critic) * n_critics;
  std::sort(pooled.begin(), pooled.end());
  pooled.resize(keep);
  return pooled;
}

std::vector<double> TqcTargetAtoms(std::span<const double> kept_atoms,
                                   double reward, double terminated,
                                   double gamma, double alpha,
                                   double log_prob_next) {
  std::vector<double> y(kept_atoms.size());
  const double discount = gamma * (1.0 - terminated);
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = reward + discount * (kept_atoms[i] - alpha * log_prob_next);
  }
  return y;
}

double HuberLoss(double u) {
  const double a = std::abs(u);
  return a <= 1.0 ? 0.5 * u * u : a - 0.5;
}

double HuberQuantile(double u, double tau) {
  return std::abs(tau - (u < 0.0 ? 1.0 : 0.0)) * HuberLoss(u);
}

double HuberQuantileLoss(std::span<const double> predicted,
                         std::span<const double> targets,
                         std::span<const double> fractions) {
  if (fractions.size() != predicted.size()) {
    throw ContractViolation("HuberQuantileLoss: one fraction per atom");
  }
  double total = 0.0;
  for (std::size_t m = 0; m < predicted.size(); ++m) {
    for (double y : targets) total += HuberQuantile(y - predicted[m], fractions[m]);
  }
  return total / static_cast<double>(predicted.size() * targets.size());
}

double HuberQuantileLossWithGrad(std::span<const double> predicted,
                                 std::span<const double> targets,
                                 std::span<const double> fractions,
                                 std::span<double> grad) {
  if (fractions.size() != predicted.size() || grad.size() != predicted.size()) {
    throw ContractViolation("HuberQuantileLoss: one fraction per atom");
  }
  const std::size_t n_atoms = predicted.size();
  const double scale = 1.0 / static_cast<double>(n_atoms * targets.size());
  // Atoms run in the inner loop, each with its own accumulator, so the
  // per-atom sums keep their sequential order and the loop vectorizes.
  // With c = clamp(u, -1, 1) the Huber loss is c * (u - c / 2) and its
  // derivative is c, so no branches are needed.
  std::vector<double> loss(n_atoms, 0.0);
  std::fill(grad.begin(), grad.end(), 0.0);
  for (double y : targets) {
    for (std::size_t m = 0; m < n_atoms; ++m) {
      const double u = y - predicted[m];
      const double weight = u < 0.0 ? 1.0 - fractions[m] : fractions[m];
      const double upper = u > 1.0 ? 1.0 : u;
      const double c = upper < -1.0 ? -1.0 : upper;
      loss[m] += weight * c * (u - 0.5 * c);
      grad[m] -= weight * c;
    }
  }
  double total = 0.0;
  for (std::size_t m = 0; m < n_atoms; ++m) {
    total += loss[m];
    grad[m] *= scale;
  }
  return total * scale;
}

DenseMatrix TqcTargets(const Minibatch& batch, std::span<const Mlp> target_bank,
                       const Mlp& actor, double alpha, double gamma,
                       std::size_t drop_per_critic,
                       const DenseMatrix& next_noise) {
  CheckBatch(batch);
  CheckCritics(target_bank);
  const std::size_t n_critics = target_bank.size();
  const std::size_t n_quantiles = target_bank.front().output_size();
  PolicySample next;
  SamplePolicy(actor, batch.next_observations, next_noise, next);

  std::vector<MlpTape> tapes(n_critics);
  for (std::size_t n = 0; n < n_critics; ++n) {
    if (target_bank[n].output_size() != n_quantiles) {
      throw ContractViolation("TqcTargets: critics disagree on atom count");
    }
    CriticForward(target_bank[n], batch.next_observations, next.actions, tapes[n]);
  }

  const std::size_t keep = (n_quantiles - std::min(drop_per_critic, n_quantiles)) *
                           n_critics;
  DenseMatrix targets(batch.size(), keep);
  std::vector<double> pooled(n_critics * n_quantiles);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    for (std::size_t n = 0; n < n_critics; ++n) {
      const auto atoms = tapes[n].output().Row(i);
      std::copy(atoms.begin(), atoms.end(), pooled.begin() + n * n_quantiles);
    }
    const auto kept =
        PoolAndTruncate(pooled, n_critics, n_quantiles, drop_per_critic);
    const auto y = TqcTargetAtoms(kept, batch.rewards[i], batch.terminated[i],
                                  gamma, alpha, next.log_probs[i]);
    std::copy(y.begin(), y.end(), targets.Row(i).begin());
  }
  return targets;
}

LossGradient TqcCriticLoss(const Minibatch& batch, const Mlp& critic,
                           const DenseMatrix& targets,
                           std::span<const double> fractions) {
  CheckBatch(batch);
  if (targets.rows() != batch.size()) {
    throw ContractViolation("TqcCriticLoss: one target row per sample");
  }
  MlpTape tape;
  CriticForward(critic, batch.observations, batch.actions, tape);
  const double n = static_cast<double>(batch.size());
  DenseMatrix upstream(batch.size(), critic.output_size());
  LossGradient out;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    auto up = upstream.Row(i);
    out.loss += HuberQuantileLossWithGrad(tape.output().Row(i), targets.Row(i),
                                          fractions, up);
    for (double& g : up) g /= n;
  }
  out.loss /= n;
  out.gradient.assign(critic.num_parameters(), 0.0);
  critic.Backward(tape, upstream, out.gradient, nullptr);
  return out;
}

PolicyLossGradient TqcActorLoss(const Minibatch& batch, const Mlp& actor,
                                std::span<const Mlp> critics, double alpha,
                                const DenseMatrix& noise) {
  CheckBatch(batch);
  CheckCritics(critics);
  const std::size_t rows = batch.size();
  const double n = static_cast<double>(rows);
  PolicySample sample;
  SamplePolicy(actor, batch.observations, noise, sample);

  std::size_t total_atoms = 0;
  for (const Mlp& c : critics) total_atoms += c.output_size();
  const double atom_weight = 1.0 / static_cast<double>(total_atoms);

  PolicyLossGradient out;
  DenseMatrix action_grad(rows, sample.actions.cols());
  for (const Mlp& critic : critics) {
    MlpTape tape;
    CriticForward(critic, batch.observations, sample.actions, tape);
    for (double v : tape.output().data()) out.loss -= v * atom_weight;
    DenseMatrix upstream(rows, critic.output_size(), -atom_weight / n);
    AccumulateActionGrad(critic, tape, upstream, batch.observations.cols(),
                         action_grad);
  }
  for (double lp : sample.log_probs) out.loss += alpha * lp;
  out.loss /= n;

  const std::vector<double> log_prob_grad(rows, alpha / n);
  out.gradient.assign(actor.num_parameters(), 0.0);
  PolicyBackward(actor, sample, noise, action_grad, log_prob_grad, out.gradient);
  out.log_probs = std::move(sample.log_probs);
  return out;
}

}  // namespace goalbench::agents
