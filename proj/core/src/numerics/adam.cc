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

#include "goalbench/numerics/adam.h"

#include <cmath>
#include <string>

#include "goalbench/error.h"

namespace goalbench::numerics {

AdamState::AdamState(std::size_t num_parameters, AdamConfig config)
    : config(config),
      first_moment(num_parameters, 0.0),
      second_moment(num_parameters, 0.0) {}

void AdamStep(std::span<double> params, std::span<const double> grads,
              AdamState& state) {
  if (params.size() != grads.size() ||
      params.size() != state.first_moment.size() ||
      params.size() != state.second_moment.size()) {
    throw ContractViolation("AdamStep: shape mismatch (params " +
                            std::to_string(params.size()) + ", grads " +
                            std::to_string(grads.size()) + ", state " +
                            std::to_string(state.first_moment.size()) + ")");
  }
  for (std::size_t i = 0; i < grads.size(); ++i) {
    if (!std::isfinite(grads[i])) {
      throw NonFiniteError("AdamStep: non-finite gradient at index " +
                           std::to_string(i));
    }
  }

  const AdamConfig& c = state.config;
  state.step_count += 1;
  const double t = static_cast<double>(state.step_count);
  const double bias1 = 1.0 - std::pow(c.beta1, t);
  const double bias2 = 1.0 - std::pow(c.beta2, t);
  double* m = state.first_moment.data();
  double* v = state.second_moment.data();
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    m[i] = c.beta1 * m[i] + (1.0 - c.beta1) * g;
    v[i] = c.beta2 * v[i] + (1.0 - c.beta2) * g * g;
    const double m_hat = m[i] / bias1;
    const double v_hat = v[i] / bias2;
    params[i] -= c.learning_rate * m_hat / (std::sqrt(v_hat) + c.epsilon);
  }
}

}  // namespace goalbench::numerics
