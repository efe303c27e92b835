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

#include "goalbench/bench/scripted_policy.h"

#include <algorithm>
#include <cmath>

namespace goalbench::bench {
namespace {

using envsim::EnvState;
using envsim::TaskConfig;
using envsim::Vec3;

constexpr double kHover = 0.055;     // clears the top of a resting object
constexpr double kLow = 0.02;
constexpr double kAlignTol = 0.006;

// Action that moves the end-effector toward `target`, saturating per axis.
std::vector<double> Toward(const Vec3& ee, const Vec3& target,
                           const TaskConfig& c, std::size_t size) {
  std::vector<double> a(size, 0.0);
  for (int i = 0; i < 3; ++i) {
    a[i] = std::clamp((target[i] - ee[i]) / c.ee_step_scale, -1.0, 1.0);
  }
  return a;
}

struct Line {
  double ux = 1.0, uy = 0.0;  // unit direction object -> goal
  double dist = 0.0;
};

Line LineTo(const Vec3& from, const Vec3& to) {
  Line l;
  const double dx = to[0] - from[0];
  const double dy = to[1] - from[1];
  l.dist = std::hypot(dx, dy);
  if (l.dist > 1e-9) {
    l.ux = dx / l.dist;
    l.uy = dy / l.dist;
  }
  return l;
}

// Moves to a point `standoff` behind the object along the line, going over
// the object when the end-effector is low and on the wrong side.
std::vector<double> Approach(const EnvState& s, const TaskConfig& c,
                             const Line& line, double standoff) {
  const Vec3& ee = s.ee_position;
  const Vec3& obj = s.object_position;
  const Vec3 behind{obj[0] - line.ux * standoff, obj[1] - line.uy * standoff,
                    kLow};
  const double planar = std::hypot(ee[0] - behind[0], ee[1] - behind[1]);
  if (planar <= kAlignTol) {
    return Toward(ee, behind, c, envsim::ActionSize(c.task_kind));
  }
  if (ee[2] < kHover - 0.005) {
    const double clear = c.ee_contact_radius + c.object_radius + 0.01;
    const double near_obj = std::hypot(ee[0] - obj[0], ee[1] - obj[1]);
    if (near_obj < clear + c.ee_step_scale) {
      // Rise in place before crossing over the object.
      return Toward(ee, {ee[0], ee[1], kHover}, c,
                    envsim::ActionSize(c.task_kind));
    }
  }
  return Toward(ee, {behind[0], behind[1], std::max(ee[2], kHover)}, c,
                envsim::ActionSize(c.task_kind));
}

bool AlignedBehind(const EnvState& s, const Line& line, double reach) {
  const Vec3& ee = s.ee_position;
  const Vec3& obj = s.object_position;
  if (ee[2] > kLow + 0.005) return false;
  const double rx = ee[0] - obj[0];
  const double ry = ee[1] - obj[1];
  const double along = rx * line.ux + ry * line.uy;
  const double lateral = -rx * line.uy + ry * line.ux;
  return std::abs(lateral) <= kAlignTol && along <= -reach + 0.005 &&
         along >= -reach - 0.04;
}

std::vector<double> Push(const EnvState& s, const TaskConfig& c) {
  const Line line = LineTo(s.object_position, s.desired_goal);
  const double reach = c.ee_contact_radius + c.object_radius;
  if (!AlignedBehind(s, line, reach)) return Approach(s, c, line, reach + 0.01);
  // Push along the line, re-centering on it every step.
  const double advance = std::min(line.dist, 0.6 * c.ee_step_scale);
  const Vec3& obj = s.object_position;
  const Vec3 target{obj[0] + line.ux * (advance - reach),
                    obj[1] + line.uy * (advance - reach), kLow};
  return Toward(s.ee_position, target, c, 3);
}

std::vector<double> Slide(const EnvState& s, const TaskConfig& c) {
  const double speed =
      std::hypot(s.object_lin_vel[0], s.object_lin_vel[1]);
  if (speed > 1e-3) return {0.0, 0.0, 0.0};
  const Line line = LineTo(s.object_position, s.desired_goal);
  const double reach = c.ee_contact_radius + c.object_radius;
  if (!AlignedBehind(s, line, reach)) return Approach(s, c, line, reach + 0.02);
  // Strike so that friction brings the puck to rest on the goal.
  const double decel = c.friction_coefficient * envsim::kGravity;
  const double v0 = std::sqrt(2.0 * decel * line.dist);
  const double ee_speed_per_action = c.ee_step_scale / envsim::kControlDt;
  const double mag = std::clamp(v0 / ee_speed_per_action, 0.0, 1.0);
  return {line.ux * mag, line.uy * mag, 0.0};
}

std::vector<double> Pick(const EnvState& s, const TaskConfig& c) {
  const Vec3& ee = s.ee_position;
  if (s.grasped) {
    const Vec3 target{s.desired_goal[0] - s.grasp_offset[0],
                      s.desired_goal[1] - s.grasp_offset[1],
                      s.desired_goal[2] - s.grasp_offset[2]};
    auto a = Toward(ee, target, c, 4);
    a[3] = -1.0;
    return a;
  }
  const Vec3& obj = s.object_position;
  bool reachable = true;
  for (int i = 0; i < 3; ++i) {
    reachable = reachable && std::abs(obj[i] - ee[i]) <= c.ee_step_scale;
  }
  auto a = Toward(ee, obj, c, 4);
  // Keep the fingers open until the cube sits between them.
  a[3] = reachable ? -1.0 : 1.0;
  return a;
}

}  // namespace

std::vector<double> ScriptedAction(const EnvState& state,
                                   const TaskConfig& config) {
  switch (config.task_kind) {
    case envsim::TaskKind::kPush:
      return Push(state, config);
    case envsim::TaskKind::kSlide:
      return Slide(state, config);
    case envsim::TaskKind::kPickAndPlace:
      return Pick(state, config);
  }
  return {};
}

}  // namespace goalbench::bench
