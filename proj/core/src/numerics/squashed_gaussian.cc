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

#include "goalbench/numerics/squashed_gaussian.h"

#include <algorithm>
#include <cmath>

#include "goalbench/error.h"

namespace goalbench::numerics {
namespace {

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // 0.5 * log(2 pi)

void CheckLengths(std::size_t a, std::size_t b, std::size_t c) {
  if (a != b || a != c) {
    throw ContractViolation("squashed Gaussian: length mismatch");
  }
}

}  // namespace

double SampleSquashedGaussianInto(std::span<const double> mean,
                                  std::span<const double> log_std,
                                  std::span<const double> noise,
                                  std::span<double> action) {
  CheckLengths(mean.size(), log_std.size(), noise.size());
  double log_prob = 0.0;
  for (std::size_t i = 0; i < mean.size(); ++i) {
    const double ls = std::clamp(log_std[i], kLogStdMin, kLogStdMax);
    const double u = mean[i] + std::exp(ls) * noise[i];
    const double a = std::tanh(u);
    action[i] = a;
    log_prob += -0.5 * noise[i] * noise[i] - ls - kHalfLogTwoPi -
                std::log(1.0 - a * a + kSquashEpsilon);
  }
  return log_prob;
}

GaussianPolicyOutput SampleSquashedGaussian(std::span<const double> mean,
                                            std::span<const double> log_std,
                                            std::span<const double> noise) {
  CheckLengths(mean.size(), log_std.size(), noise.size());
  GaussianPolicyOutput out;
  out.mean.assign(mean.begin(), mean.end());
  out.log_std.resize(mean.size());
  out.pre_squash.resize(mean.size());
  out.sampled_action.resize(mean.size());
  for (std::size_t i = 0; i < mean.size(); ++i) {
    out.log_std[i] = std::clamp(log_std[i], kLogStdMin, kLogStdMax);
    out.pre_squash[i] = mean[i] + std::exp(out.log_std[i]) * noise[i];
  }
  out.log_prob =
      SampleSquashedGaussianInto(mean, log_std, noise, out.sampled_action);
  return out;
}

void SquashedGaussianBackward(std::span<const double> mean,
                              std::span<const double> log_std,
                              std::span<const double> noise,
                              std::span<const double> action_grad,
                              double log_prob_grad,
                              std::span<double> mean_grad,
                              std::span<double> log_std_grad) {
  CheckLengths(mean.size(), log_std.size(), noise.size());
  for (std::size_t i = 0; i < mean.size(); ++i) {
    const bool clamped = log_std[i] < kLogStdMin || log_std[i] > kLogStdMax;
    const double ls = std::clamp(log_std[i], kLogStdMin, kLogStdMax);
    const double std_dev = std::exp(ls);
    const double a = std::tanh(mean[i] + std_dev * noise[i]);
    const double one_minus_a2 = 1.0 - a * a;
    // d action / du and d(-log(1 - a^2 + eps)) / du.
    const double da_du = one_minus_a2;
    const double dsquash_du = 2.0 * a * one_minus_a2 / (one_minus_a2 + kSquashEpsilon);
    const double du = action_grad[i] * da_du + log_prob_grad * dsquash_du;
    mean_grad[i] = du;
    // u depends on log_std through std * noise; the Gaussian term adds -1.
    log_std_grad[i] = clamped ? 0.0 : du * std_dev * noise[i] - log_prob_grad;
  }
}

}  // namespace goalbench::numerics
