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

#ifndef GOALBENCH_ENVSIM_TYPES_H_
#define GOALBENCH_ENVSIM_TYPES_H_

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace goalbench::envsim {

using Vec3 = std::array<double, 3>;

enum class TaskKind { kPush, kSlide, kPickAndPlace };
enum class RewardMode { kSparse, kDense };

std::string_view TaskName(TaskKind kind);       // "push", "slide", "pick"
TaskKind ParseTaskKind(std::string_view name);  // throws ContractViolation
std::string_view RewardModeName(RewardMode mode);
RewardMode ParseRewardMode(std::string_view name);

inline constexpr int kEpisodeLength = 50;
inline constexpr double kControlDt = 0.04;  // seconds per env step
inline constexpr int kSubsteps = 20;
inline constexpr double kSubstepDt = kControlDt / kSubsteps;
inline constexpr double kGravity = 9.81;

// Object geometry. Every object rests with its center 2 cm above the table.
inline constexpr double kObjectRestHeight = 0.02;
inline constexpr double kObjectHalfHeight = 0.02;
inline constexpr double kObjectWidth = 0.04;      // cube side, pick task
inline constexpr double kMaxGripperWidth = 0.08;
inline constexpr double kGripperRate = 0.04;      // width change per unit action
inline constexpr double kGraspRadius = 0.01;

struct Box3 {
  Vec3 low{};
  Vec3 high{};

  bool Contains(const Vec3& p) const;
  Vec3 Clamp(const Vec3& p) const;
  bool Degenerate() const;  // zero extent along every axis
};

struct TaskConfig {
  TaskKind task_kind = TaskKind::kPush;
  RewardMode reward_mode = RewardMode::kSparse;
  double success_threshold = 0.05;
  double air_target_probability = 0.5;  // pick only
  double air_goal_max_height = 0.2;     // lift above rest height, pick only
  double friction_coefficient = 1.0;    // Coulomb coefficient; slide uses it
  double ee_step_scale = 0.05;          // meters per unit action per step
  double ee_contact_radius = 0.02;
  double object_radius = 0.02;
  Vec3 ee_home{0.0, 0.0, 0.03};  // object height: random actions make contact
  Box3 workspace{{-0.25, -0.25, 0.015}, {0.25, 0.25, 0.30}};
  Box3 object_region{};
  Box3 goal_region{};

  // Throws ContractViolation when a field is out of range.
  void Validate() const;
};

// Task defaults. Slide goals extend past the reach of the end-effector so
// the puck has to be struck rather than carried.
TaskConfig DefaultTaskConfig(TaskKind kind);

struct EnvState {
  Vec3 ee_position{};
  Vec3 ee_velocity{};
  double gripper_width = 0.0;
  Vec3 object_position{};
  Vec3 object_euler{};
  Vec3 object_lin_vel{};
  Vec3 object_ang_vel{};
  Vec3 desired_goal{};
  int step_index = 0;
  bool grasped = false;
  Vec3 grasp_offset{};       // object - ee while grasped
  double fall_speed = 0.0;   // downward speed of a released object
  bool episode_over = false;

  friend bool operator==(const EnvState&, const EnvState&) = default;
};

struct GoalObservation {
  std::vector<double> observation;
  Vec3 achieved_goal{};
  Vec3 desired_goal{};

  friend bool operator==(const GoalObservation&, const GoalObservation&) =
      default;
};

struct StepResult {
  GoalObservation observation;
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;
  bool success = false;

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

struct Slice {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
  std::size_t size() const { return end - begin; }
};

// Where each physical quantity sits in the flat observation vector.
struct ObservationLayout {
  Slice ee_position;
  Slice ee_velocity;
  Slice object_position;
  Slice object_euler;
  Slice object_lin_vel;
  Slice object_ang_vel;
  bool has_finger_width = false;
  std::size_t finger_width = 0;
  std::size_t total = 0;

  std::vector<Slice> Slices() const;
};

ObservationLayout ObservationLayoutFor(TaskKind kind);

inline std::size_t ObservationSize(TaskKind kind) {
  return kind == TaskKind::kPickAndPlace ? 19 : 18;
}
inline std::size_t ActionSize(TaskKind kind) {
  return kind == TaskKind::kPickAndPlace ? 4 : 3;
}
inline constexpr std::size_t kGoalSize = 3;

}  // namespace goalbench::envsim

#endif  // GOALBENCH_ENVSIM_TYPES_H_
