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

#ifndef GOALBENCH_ENVSIM_TABLETOP_ENV_H_
#define GOALBENCH_ENVSIM_TABLETOP_ENV_H_

#include <cstdint>
#include <span>
#include <utility>

#include "goalbench/envsim/types.h"

namespace goalbench::envsim {

// Sparse: 0 inside the closed success ball, -1 outside. Dense: -distance.
double ComputeReward(const Vec3& achieved, const Vec3& desired,
                     const TaskConfig& config);

bool IsSuccess(const Vec3& achieved, const Vec3& desired,
               const TaskConfig& config);

GoalObservation Observe(const EnvState& state, const TaskConfig& config);

// Starts an episode: end-effector at home, object and goal sampled from the
// configured regions with a separation larger than the success threshold.
// Fully determined by `seed`.
std::pair<EnvState, GoalObservation> Reset(const TaskConfig& config,
                                           std::uint64_t seed);

// Advances one control step of kControlDt seconds. Action entries are
// clamped to [-1, 1]. Throws ContractViolation for a wrong action length or
// when the episode is already over.
StepResult Step(EnvState& state, std::span<const double> action,
                const TaskConfig& config);

// Owns a config and the state of the running episode.
class TabletopEnv {
 public:
  explicit TabletopEnv(TaskConfig config);

  GoalObservation Reset(std::uint64_t seed);
  StepResult Step(std::span<const double> action);

  const TaskConfig& config() const { return config_; }
  const EnvState& state() const { return state_; }
  std::size_t observation_size() const {
    return ObservationSize(config_.task_kind);
  }
  std::size_t action_size() const { return ActionSize(config_.task_kind); }

 private:
  TaskConfig config_;
  EnvState state_;
};

}  // namespace goalbench::envsim

#endif  // GOALBENCH_ENVSIM_TABLETOP_ENV_H_
