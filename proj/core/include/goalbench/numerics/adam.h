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

#ifndef GOALBENCH_NUMERICS_ADAM_H_
#define GOALBENCH_NUMERICS_ADAM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace goalbench::numerics {

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  friend bool operator==(const AdamConfig&, const AdamConfig&) = default;
};

struct AdamState {
  AdamState() = default;
  AdamState(std::size_t num_parameters, AdamConfig config);

  AdamConfig config;
  std::vector<double> first_moment;
  std::vector<double> second_moment;
  std::uint64_t step_count = 0;

  friend bool operator==(const AdamState&, const AdamState&) = default;
};

// One bias-corrected Adam step. Throws ContractViolation on a shape mismatch
// and NonFiniteError (leaving params and state untouched) if any gradient is
// not finite.
void AdamStep(std::span<double> params, std::span<const double> grads,
              AdamState& state);

}  // namespace goalbench::numerics

#endif  // GOALBENCH_NUMERICS_ADAM_H_
