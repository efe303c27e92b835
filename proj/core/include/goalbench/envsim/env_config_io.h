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

#ifndef GOALBENCH_ENVSIM_ENV_CONFIG_IO_H_
#define GOALBENCH_ENVSIM_ENV_CONFIG_IO_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "goalbench/envsim/types.h"

namespace goalbench::envsim {

// Ordered `key = value` pairs. Blank lines and lines starting with '#' are
// ignored; a repeated key keeps the last value.
using KeyValues = std::map<std::string, std::string>;

KeyValues ParseKeyValues(std::string_view text);
KeyValues ReadKeyValueFile(const std::filesystem::path& path);

// Recognized task keys:
//   task                    push | slide | pick
//   reward_mode             sparse | dense
//   success_threshold       meters
//   air_target_probability  [0, 1]
//   air_goal_max_height     meters
//   friction_coefficient
//   ee_step_scale           meters per unit action
//   object_region_low, object_region_high, goal_region_low,
//   goal_region_high, workspace_low, workspace_high   "x y z"
//
// Starts from DefaultTaskConfig(task) and applies every recognized key.
// Keys consumed are erased from `values`, leaving the rest for the caller.
TaskConfig TaskConfigFromKeyValues(KeyValues& values);

TaskConfig LoadTaskConfig(const std::filesystem::path& path);

std::string FormatTaskConfig(const TaskConfig& config);

}  // namespace goalbench::envsim

#endif  // GOALBENCH_ENVSIM_ENV_CONFIG_IO_H_
