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

#include "goalbench/envsim/tabletop_env.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "goalbench/error.h"

namespace goalbench::envsim {
namespace {

constexpr int kMaxGoalDraws = 10000;
// Push and slide never need to lift: keeping the end-effector near the
// contact band lets undirected exploration touch the object.
constexpr double kPlanarCeiling = 0.06;

double Distance(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Vec3 SampleBox(const Box3& box, std::mt19937_64& rng) {
  Vec3 p{};
  for (int i = 0; i < 3; ++i) {
    std::uniform_real_distribution<double> dist(box.low[i], box.high[i]);
    p[i] = box.low[i] == box.high[i] ? box.low[i] : dist(rng);
  }
  return p;
}

bool ContactAllowed(const EnvState& s, const TaskConfig& c) {
  if (c.task_kind != TaskKind::kPickAndPlace) return true;
  // An open gripper straddles the cube; closed fingers push it.
  return !s.grasped && s.gripper_width <= kObjectWidth &&
         s.object_position[2] <= kObjectRestHeight;
}

// Resolves end-effector/object overlap in the table plane. Returns the
// contact normal (object minus ee, unit length) when touching.
bool ResolveContact(const Vec3& ee, const Vec3& ee_motion, EnvState& s,
                    const TaskConfig& c, double* nx, double* ny) {
  if (ee[2] >= s.object_position[2] + kObjectHalfHeight) return false;
  const double reach = c.ee_contact_radius + c.object_radius;
  double dx = s.object_position[0] - ee[0];
  double dy = s.object_position[1] - ee[1];
  double d = std::hypot(dx, dy);
  if (d >= reach) return false;
  if (d > 0.0) {
    dx /= d;
    dy /= d;
  } else {
    const double m = std::hypot(ee_motion[0], ee_motion[1]);
    dx = m > 0.0 ? ee_motion[0] / m : 1.0;
    dy = m > 0.0 ? ee_motion[1] / m : 0.0;
  }
  s.object_position[0] = ee[0] + dx * reach;
  s.object_position[1] = ee[1] + dy * reach;
  *nx = dx;
  *ny = dy;
  return true;
}

void ApplyCoulombFriction(EnvState& s, double mu) {
  double& vx = s.object_lin_vel[0];
  double& vy = s.object_lin_vel[1];
  const double speed = std::hypot(vx, vy);
  if (speed <= 0.0) return;
  const double slowed = std::max(0.0, speed - mu * kGravity * kSubstepDt);
  vx *= slowed / speed;
  vy *= slowed / speed;
}

void ApplyFall(EnvState& s) {
  if (s.grasped || s.object_position[2] <= kObjectRestHeight) return;
  s.fall_speed += kGravity * kSubstepDt;
  s.object_position[2] -= s.fall_speed * kSubstepDt;
  if (s.object_position[2] <= kObjectRestHeight) {
    s.object_position[2] = kObjectRestHeight;
    s.fall_speed = 0.0;
  }
}

}  // namespace

std::string_view TaskName(TaskKind kind) {
  switch (kind) {
    case TaskKind::kPush:
      return "push";
    case TaskKind::kSlide:
      return "slide";
    case TaskKind::kPickAndPlace:
      return "pick";
  }
  return "unknown";
}

TaskKind ParseTaskKind(std::string_view name) {
  if (name == "push") return TaskKind::kPush;
  if (name == "slide") return TaskKind::kSlide;
  if (name == "pick" || name == "pickandplace" || name == "pick_and_place") {
    return TaskKind::kPickAndPlace;
  }
  throw ContractViolation("unknown task '" + std::string(name) +
                          "' (expected push, slide or pick)");
}

std::string_view RewardModeName(RewardMode mode) {
  return mode == RewardMode::kSparse ? "sparse" : "dense";
}

RewardMode ParseRewardMode(std::string_view name) {
  if (name == "sparse") return RewardMode::kSparse;
  if (name == "dense") return RewardMode::kDense;
  throw ContractViolation("unknown reward mode '" + std::string(name) +
                          "' (expected sparse or dense)");
}

bool Box3::Contains(const Vec3& p) const {
  for (int i = 0; i < 3; ++i) {
    if (p[i] < low[i] || p[i] > high[i]) return false;
  }
  return true;
}

Vec3 Box3::Clamp(const Vec3& p) const {
  return {std::clamp(p[0], low[0], high[0]), std::clamp(p[1], low[1], high[1]),
          std::clamp(p[2], low[2], high[2])};
}

bool Box3::Degenerate() const {
  return low[0] == high[0] && low[1] == high[1] && low[2] == high[2];
}

void TaskConfig::Validate() const {
  if (!(success_threshold > 0.0)) {
    throw ContractViolation("success_threshold must be positive");
  }
  if (!(air_target_probability >= 0.0 && air_target_probability <= 1.0)) {
    throw ContractViolation("air_target_probability must lie in [0, 1]");
  }
  if (!(friction_coefficient >= 0.0)) {
    throw ContractViolation("friction_coefficient must be non-negative");
  }
  if (!(ee_step_scale > 0.0)) {
    throw ContractViolation("ee_step_scale must be positive");
  }
  if (!(air_goal_max_height >= 0.0)) {
    throw ContractViolation("air_goal_max_height must be non-negative");
  }
  for (const Box3* box : {&workspace, &object_region, &goal_region}) {
    for (int i = 0; i < 3; ++i) {
      if (!(box->low[i] <= box->high[i])) {
        throw ContractViolation("region bounds must satisfy low <= high");
      }
    }
  }
  if (!workspace.Contains(ee_home)) {
    throw ContractViolation("ee_home lies outside the workspace");
  }
}

TaskConfig DefaultTaskConfig(TaskKind kind) {
  TaskConfig c;
  c.task_kind = kind;
  switch (kind) {
    case TaskKind::kPush:
      c.friction_coefficient = 1.0;
      c.workspace.high[2] = kPlanarCeiling;
      c.object_region = {{-0.15, -0.15, kObjectRestHeight},
                         {0.15, 0.15, kObjectRestHeight}};
      c.goal_region = c.object_region;
      break;
    case TaskKind::kSlide:
      c.friction_coefficient = 0.03;
      c.object_radius = 0.03;
      c.workspace.high[2] = kPlanarCeiling;
      c.object_region = {{-0.20, -0.10, kObjectRestHeight},
                         {-0.05, 0.10, kObjectRestHeight}};
      c.goal_region = {{0.15, -0.20, kObjectRestHeight},
                       {0.45, 0.20, kObjectRestHeight}};
      break;
    case TaskKind::kPickAndPlace:
      c.friction_coefficient = 1.0;
      c.object_region = {{-0.15, -0.15, kObjectRestHeight},
                         {0.15, 0.15, kObjectRestHeight}};
      c.goal_region = c.object_region;
      break;
  }
  return c;
}

std::vector<Slice> ObservationLayout::Slices() const {
  std::vector<Slice> out = {ee_position,  ee_velocity,    object_position,
                            object_euler, object_lin_vel, object_ang_vel};
  if (has_finger_width) out.push_back({finger_width, finger_width + 1});
  return out;
}

ObservationLayout ObservationLayoutFor(TaskKind kind) {
  ObservationLayout l;
  l.ee_position = {0, 3};
  l.ee_velocity = {3, 6};
  l.object_position = {6, 9};
  l.object_euler = {9, 12};
  l.object_lin_vel = {12, 15};
  l.object_ang_vel = {15, 18};
  l.has_finger_width = kind == TaskKind::kPickAndPlace;
  l.finger_width = 18;
  l.total = l.has_finger_width ? 19 : 18;
  return l;
}

double ComputeReward(const Vec3& achieved, const Vec3& desired,
                     const TaskConfig& config) {
  const double d = Distance(achieved, desired);
  if (config.reward_mode == RewardMode::kDense) return -d;
  return d <= config.success_threshold ? 0.0 : -1.0;
}

bool IsSuccess(const Vec3& achieved, const Vec3& desired,
               const TaskConfig& config) {
  return Distance(achieved, desired) <= config.success_threshold;
}

GoalObservation Observe(const EnvState& s, const TaskConfig& config) {
  GoalObservation obs;
  obs.observation.reserve(ObservationSize(config.task_kind));
  for (const Vec3* v : {&s.ee_position, &s.ee_velocity, &s.object_position,
                        &s.object_euler, &s.object_lin_vel,
                        &s.object_ang_vel}) {
    obs.observation.insert(obs.observation.end(), v->begin(), v->end());
  }
  if (config.task_kind == TaskKind::kPickAndPlace) {
    obs.observation.push_back(s.gripper_width);
  }
  obs.achieved_goal = s.object_position;
  obs.desired_goal = s.desired_goal;
  return obs;
}

std::pair<EnvState, GoalObservation> Reset(const TaskConfig& config,
                                           std::uint64_t seed) {
  config.Validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  EnvState s;
  s.ee_position = config.ee_home;
  s.gripper_width =
      config.task_kind == TaskKind::kPickAndPlace ? kMaxGripperWidth : 0.0;
  s.object_position = SampleBox(config.object_region, rng);

  if (config.object_region.Degenerate() && config.goal_region.Degenerate() &&
      config.task_kind != TaskKind::kPickAndPlace &&
      Distance(config.object_region.low, config.goal_region.low) <=
          config.success_threshold) {
    throw ContractViolation(
        "Reset: degenerate object and goal regions cannot be separated");
  }
  bool separated = false;
  for (int draw = 0; draw < kMaxGoalDraws && !separated; ++draw) {
    s.desired_goal = SampleBox(config.goal_region, rng);
    if (config.task_kind == TaskKind::kPickAndPlace &&
        unit(rng) < config.air_target_probability) {
      s.desired_goal[2] += unit(rng) * config.air_goal_max_height;
    }
    separated = Distance(s.object_position, s.desired_goal) >
                config.success_threshold;
  }
  if (!separated) {
    throw ContractViolation(
        "Reset: could not sample a goal farther than the success threshold "
        "from the object; check the sampling regions");
  }
  return {s, Observe(s, config)};
}

StepResult Step(EnvState& s, std::span<const double> action,
                const TaskConfig& config) {
  const std::size_t expected = ActionSize(config.task_kind);
  if (action.size() != expected) {
    throw ContractViolation("Step: action length " +
                            std::to_string(action.size()) + " != " +
                            std::to_string(expected));
  }
  if (s.episode_over || s.step_index >= kEpisodeLength) {
    throw ContractViolation("Step: episode is over; call Reset first");
  }
  double a[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < expected; ++i) {
    if (!std::isfinite(action[i])) {
      throw ContractViolation("Step: non-finite action");
    }
    a[i] = std::clamp(action[i], -1.0, 1.0);
  }

  const bool pick = config.task_kind == TaskKind::kPickAndPlace;
  const bool slide = config.task_kind == TaskKind::kSlide;

  const Vec3 ee_start = s.ee_position;
  const Vec3 object_start = s.object_position;
  Vec3 ee_target = config.workspace.Clamp(
      {ee_start[0] + config.ee_step_scale * a[0],
       ee_start[1] + config.ee_step_scale * a[1],
       ee_start[2] + config.ee_step_scale * a[2]});
  if (s.grasped) {
    // The held object cannot be driven into the table.
    ee_target[2] = std::max(ee_target[2], kObjectRestHeight - s.grasp_offset[2]);
  }
  const Vec3 motion{ee_target[0] - ee_start[0], ee_target[1] - ee_start[1],
                    ee_target[2] - ee_start[2]};
  Vec3 ee_velocity{motion[0] / kControlDt, motion[1] / kControlDt,
                   motion[2] / kControlDt};

  for (int sub = 1; sub <= kSubsteps; ++sub) {
    if (sub == kSubsteps) {
      s.ee_position = ee_target;
    } else {
      const double f = static_cast<double>(sub) / kSubsteps;
      for (int i = 0; i < 3; ++i) s.ee_position[i] = ee_start[i] + f * motion[i];
    }

    if (s.grasped) {
      for (int i = 0; i < 3; ++i) {
        s.object_position[i] = s.ee_position[i] + s.grasp_offset[i];
      }
      continue;
    }
    if (pick) ApplyFall(s);

    double nx = 0.0, ny = 0.0;
    const bool touching =
        ContactAllowed(s, config) &&
        ResolveContact(s.ee_position, motion, s, config, &nx, &ny);
    if (slide) {
      if (touching) {
        // Impulsive strike: the puck takes on the end-effector's approach
        // speed along the contact normal.
        const double rel = (ee_velocity[0] - s.object_lin_vel[0]) * nx +
                           (ee_velocity[1] - s.object_lin_vel[1]) * ny;
        if (rel > 0.0) {
          s.object_lin_vel[0] += rel * nx;
          s.object_lin_vel[1] += rel * ny;
        }
      }
      ApplyCoulombFriction(s, config.friction_coefficient);
      s.object_position[0] += s.object_lin_vel[0] * kSubstepDt;
      s.object_position[1] += s.object_lin_vel[1] * kSubstepDt;
    }
  }

  if (pick) {
    const double commanded =
        std::clamp(s.gripper_width + kGripperRate * a[3], 0.0, kMaxGripperWidth);
    if (s.grasped) {
      if (commanded > kObjectWidth) {
        s.grasped = false;
        s.fall_speed = 0.0;
        s.gripper_width = commanded;
      } else {
        s.gripper_width = kObjectWidth;
      }
    } else {
      s.gripper_width = commanded;
      if (s.gripper_width <= kObjectWidth &&
          Distance(s.ee_position, s.object_position) <= kGraspRadius) {
        s.grasped = true;
        s.gripper_width = kObjectWidth;
        for (int i = 0; i < 3; ++i) {
          s.grasp_offset[i] = s.object_position[i] - s.ee_position[i];
        }
      }
    }
  }

  s.ee_velocity = ee_velocity;
  if (!slide) {
    // Quasi-static objects keep no momentum between steps; report the mean
    // velocity over the step.
    for (int i = 0; i < 3; ++i) {
      s.object_lin_vel[i] = (s.object_position[i] - object_start[i]) / kControlDt;
    }
  }
  s.step_index += 1;

  StepResult result;
  result.observation = Observe(s, config);
  result.reward = ComputeReward(s.object_position, s.desired_goal, config);
  result.success = IsSuccess(s.object_position, s.desired_goal, config);
  result.terminated = result.success;
  result.truncated = !result.terminated && s.step_index >= kEpisodeLength;
  s.episode_over = result.terminated || result.truncated;
  return result;
}

TabletopEnv::TabletopEnv(TaskConfig config) : config_(std::move(config)) {
  config_.Validate();
}

GoalObservation TabletopEnv::Reset(std::uint64_t seed) {
  auto [state, obs] = envsim::Reset(config_, seed);
  state_ = state;
  return obs;
}

StepResult TabletopEnv::Step(std::span<const double> action) {
  return envsim::Step(state_, action, config_);
}

}  // namespace goalbench::envsim
