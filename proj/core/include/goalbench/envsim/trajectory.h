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

#ifndef GOALBENCH_ENVSIM_TRAJECTORY_H_
#define GOALBENCH_ENVSIM_TRAJECTORY_H_

#include <filesystem>
#include <ostream>
#include <vector>

#include "goalbench/envsim/types.h"

namespace goalbench::envsim {

struct TrajectoryRow {
  int step = 0;
  Vec3 ee_position{};
  Vec3 object_position{};
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;
};

TrajectoryRow MakeTrajectoryRow(const EnvState& state, const StepResult& result);

// Header: step,ee_x,ee_y,ee_z,obj_x,obj_y,obj_z,reward,terminated,truncated
void WriteTrajectoryCsv(std::ostream& out,
                        const std::vector<TrajectoryRow>& rows);
void WriteTrajectoryCsv(const std::filesystem::path& path,
                        const std::vector<TrajectoryRow>& rows);

}  // namespace goalbench::envsim

#endif  // GOALBENCH_ENVSIM_TRAJECTORY_H_
