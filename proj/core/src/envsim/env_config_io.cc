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

#include "goalbench/envsim/env_config_io.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "goalbench/error.h"

namespace goalbench::envsim {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double ParseReal(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  double v = 0.0;
  in >> v;
  if (in.fail() || !(in >> std::ws).eof()) {
    throw FormatError("config key '" + key + "': expected a number, got '" +
                      value + "'");
  }
  return v;
}

Vec3 ParseVec3(const std::string& key, const std::string& value) {
  std::string normalized = value;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  Vec3 v{};
  in >> v[0] >> v[1] >> v[2];
  if (in.fail() || !(in >> std::ws).eof()) {
    throw FormatError("config key '" + key +
                      "': expected three numbers \"x y z\", got '" + value +
                      "'");
  }
  return v;
}

template <typename Fn>
void Take(KeyValues& values, const char* key, Fn&& apply) {
  auto it = values.find(key);
  if (it == values.end()) return;
  apply(it->second);
  values.erase(it);
}

}  // namespace

KeyValues ParseKeyValues(std::string_view text) {
  KeyValues out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError(fmt::format("line {}: expected 'key = value'", line_no));
    }
    const auto key = Trim(line.substr(0, eq));
    const auto value = Trim(line.substr(eq + 1));
    if (key.empty()) {
      throw FormatError(fmt::format("line {}: empty key", line_no));
    }
    out[std::string(key)] = std::string(value);
  }
  return out;
}

KeyValues ReadKeyValueFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseKeyValues(buffer.str());
}

TaskConfig TaskConfigFromKeyValues(KeyValues& values) {
  TaskKind kind = TaskKind::kPush;
  Take(values, "task", [&](const std::string& v) { kind = ParseTaskKind(v); });
  TaskConfig c = DefaultTaskConfig(kind);
  Take(values, "reward_mode",
       [&](const std::string& v) { c.reward_mode = ParseRewardMode(v); });
  Take(values, "success_threshold", [&](const std::string& v) {
    c.success_threshold = ParseReal("success_threshold", v);
  });
  Take(values, "air_target_probability", [&](const std::string& v) {
    c.air_target_probability = ParseReal("air_target_probability", v);
  });
  Take(values, "air_goal_max_height", [&](const std::string& v) {
    c.air_goal_max_height = ParseReal("air_goal_max_height", v);
  });
  Take(values, "friction_coefficient", [&](const std::string& v) {
    c.friction_coefficient = ParseReal("friction_coefficient", v);
  });
  Take(values, "ee_step_scale", [&](const std::string& v) {
    c.ee_step_scale = ParseReal("ee_step_scale", v);
  });
  Take(values, "object_region_low", [&](const std::string& v) {
    c.object_region.low = ParseVec3("object_region_low", v);
  });
  Take(values, "object_region_high", [&](const std::string& v) {
    c.object_region.high = ParseVec3("object_region_high", v);
  });
  Take(values, "goal_region_low", [&](const std::string& v) {
    c.goal_region.low = ParseVec3("goal_region_low", v);
  });
  Take(values, "goal_region_high", [&](const std::string& v) {
    c.goal_region.high = ParseVec3("goal_region_high", v);
  });
  Take(values, "workspace_low", [&](const std::string& v) {
    c.workspace.low = ParseVec3("workspace_low", v);
  });
  Take(values, "workspace_high", [&](const std::string& v) {
    c.workspace.high = ParseVec3("workspace_high", v);
  });
  c.Validate();
  return c;
}

TaskConfig LoadTaskConfig(const std::filesystem::path& path) {
  KeyValues values = ReadKeyValueFile(path);
  TaskConfig c = TaskConfigFromKeyValues(values);
  if (!values.empty()) {
    throw FormatError("unknown task config key '" + values.begin()->first +
                      "' in " + path.string());
  }
  return c;
}

std::string FormatTaskConfig(const TaskConfig& c) {
  auto vec = [](const Vec3& v) { return fmt::format("{} {} {}", v[0], v[1], v[2]); };
  std::string out;
  out += fmt::format("task = {}\n", TaskName(c.task_kind));
  out += fmt::format("reward_mode = {}\n", RewardModeName(c.reward_mode));
  out += fmt::format("success_threshold = {}\n", c.success_threshold);
  out += fmt::format("air_target_probability = {}\n", c.air_target_probability);
  out += fmt::format("air_goal_max_height = {}\n", c.air_goal_max_height);
  out += fmt::format("friction_coefficient = {}\n", c.friction_coefficient);
  out += fmt::format("ee_step_scale = {}\n", c.ee_step_scale);
  out += fmt::format("object_region_low = {}\n", vec(c.object_region.low));
  out += fmt::format("object_region_high = {}\n", vec(c.object_region.high));
  out += fmt::format("goal_region_low = {}\n", vec(c.goal_region.low));
  out += fmt::format("goal_region_high = {}\n", vec(c.goal_region.high));
  out += fmt::format("workspace_low = {}\n", vec(c.workspace.low));
  out += fmt::format("workspace_high = {}\n", vec(c.workspace.high));
  return out;
}

}  // namespace goalbench::envsim
