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

#include "goalbench/envsim/trajectory.h"

#include <fstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "goalbench/error.h"

namespace goalbench::envsim {

TrajectoryRow MakeTrajectoryRow(const EnvState& state,
                                const StepResult& result) {
  return {state.step_index, state.ee_position, state.object_position,
          result.reward,    result.terminated, result.truncated};
}

void WriteTrajectoryCsv(std::ostream& out,
                        const std::vector<TrajectoryRow>& rows) {
  out << "step,ee_x,ee_y,ee_z,obj_x,obj_y,obj_z,reward,terminated,truncated\n";
  for (const auto& r : rows) {
    fmt::print(out, "{},{:.9g},{:.9g},{:.9g},{:.9g},{:.9g},{:.9g},{:.9g},{},{}\n",
               r.step, r.ee_position[0], r.ee_position[1], r.ee_position[2],
               r.object_position[0], r.object_position[1],
               r.object_position[2], r.reward, r.terminated ? 1 : 0,
               r.truncated ? 1 : 0);
  }
}

void WriteTrajectoryCsv(const std::filesystem::path& path,
                        const std::vector<TrajectoryRow>& rows) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  WriteTrajectoryCsv(out, rows);
}

}  // namespace goalbench::envsim
