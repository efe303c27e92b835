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

#ifndef GOALBENCH_NUMERICS_SQUASHED_GAUSSIAN_H_
#define GOALBENCH_NUMERICS_SQUASHED_GAUSSIAN_H_

#include <span>
#include <vector>

namespace goalbench::numerics {

inline constexpr double kLogStdMin = -20.0;
inline constexpr double kLogStdMax = 2.0;
inline constexpr double kSquashEpsilon = 1e-6;

struct GaussianPolicyOutput {
  std::vector<double> mean;
  std::vector<double> log_std;  // after clamping
  std::vector<double> pre_squash;
  std::vector<double> sampled_action;
  double log_prob = 0.0;
};

// Reparameterized tanh-Gaussian sample:
//   u = mean + exp(log_std) * noise,  action = tanh(u),
//   log_prob = sum_i [log N(u_i; mean_i, std_i) - log(1 - tanh(u_i)^2 + eps)].
// log_std is clamped to [kLogStdMin, kLogStdMax].
GaussianPolicyOutput SampleSquashedGaussian(std::span<const double> mean,
                                            std::span<const double> log_std,
                                            std::span<const double> noise);

// Allocation-free variant used on the training path. Writes the action and
// returns log_prob.
double SampleSquashedGaussianInto(std::span<const double> mean,
                                  std::span<const double> log_std,
                                  std::span<const double> noise,
                                  std::span<double> action);

// Pulls upstream gradients on (action, log_prob) back to (mean, raw log_std)
// for a fixed noise draw. Gradients are overwritten, not accumulated. The
// log_std gradient is zero where the clamp is active.
void SquashedGaussianBackward(std::span<const double> mean,
                              std::span<const double> log_std,
                              std::span<const double> noise,
                              std::span<const double> action_grad,
                              double log_prob_grad,
                              std::span<double> mean_grad,
                              std::span<double> log_std_grad);

}  // namespace goalbench::numerics

#endif  // GOALBENCH_NUMERICS_SQUASHED_GAUSSIAN_H_
