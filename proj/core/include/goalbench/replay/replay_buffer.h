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

#ifndef GOALBENCH_REPLAY_REPLAY_BUFFER_H_
#define GOALBENCH_REPLAY_REPLAY_BUFFER_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "goalbench/envsim/types.h"
#include "goalbench/numerics/dense_matrix.h"

namespace goalbench::replay {

using envsim::GoalObservation;
using envsim::Vec3;

struct Transition {
  GoalObservation state_obs;
  std::vector<double> action;
  double reward = 0.0;
  GoalObservation next_obs;
  bool terminated = false;
  bool relabeled = false;

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Columnar minibatch. Agent inputs are the flat observation followed by the
// desired goal.
struct Minibatch {
  numerics::DenseMatrix observations;
  numerics::DenseMatrix actions;
  std::vector<double> rewards;
  numerics::DenseMatrix next_observations;
  std::vector<double> terminated;  // 1.0 or 0.0

  std::size_t size() const { return rewards.size(); }
};

// Ring buffer of transitions with FIFO eviction. Within a stored transition
// the desired goal is shared by the current and next observation.
class ReplayBuffer {
 public:
  ReplayBuffer(std::size_t capacity, std::size_t obs_dim,
               std::size_t action_dim);

  void Add(const Transition& t);

  // Logical index 0 is the oldest transition still held.
  Transition Get(std::size_t index) const;

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t obs_dim() const { return obs_dim_; }
  std::size_t action_dim() const { return action_dim_; }
  std::size_t input_dim() const { return obs_dim_ + envsim::kGoalSize; }

  // Uniform sampling with replacement. Throws ContractViolation when fewer
  // than `batch_size` transitions are stored.
  Minibatch SampleBatch(std::size_t batch_size, std::mt19937_64& rng) const;
  void SampleBatchInto(std::size_t batch_size, std::mt19937_64& rng,
                       Minibatch& out) const;

  // Binary snapshot: "GBRB" magic, u32 version, u64 capacity, obs_dim,
  // action_dim, size, then `size` records of packed little-endian doubles
  // (oldest first) in the column order used by Add().
  void SaveSnapshot(const std::filesystem::path& path) const;
  static ReplayBuffer LoadSnapshot(const std::filesystem::path& path);

 private:
  std::size_t Physical(std::size_t logical) const;
  std::span<const double> Record(std::size_t physical) const;

  std::size_t capacity_;
  std::size_t obs_dim_;
  std::size_t action_dim_;
  std::size_t stride_;
  std::size_t size_ = 0;
  std::size_t head_ = 0;  // next physical slot to write
  std::vector<double> storage_;
};

struct RelabelFunctions {
  std::function<double(const Vec3& achieved, const Vec3& desired)> reward;
  std::function<bool(const Vec3& achieved, const Vec3& desired)> terminated;
};

// Reward from the task; termination on success, matching the environment.
RelabelFunctions RelabelFunctionsFor(const envsim::TaskConfig& config);

// Stores every transition of `episode` plus, for each step t with a later
// step available, `her_k` copies whose desired goal is the achieved goal
// observed at a uniformly drawn step t' in (t, T - 1]. Relabeled rewards and
// termination flags are recomputed. Returns the number of records written.
std::size_t StoreEpisode(ReplayBuffer& buffer,
                         const std::vector<Transition>& episode,
                         std::size_t her_k, std::mt19937_64& rng,
                         const RelabelFunctions& fns);

// Count written by StoreEpisode for an episode of `length` steps.
inline std::size_t StoredCount(std::size_t length, std::size_t her_k) {
  return length == 0 ? 0 : length + her_k * (length - 1);
}

}  // namespace goalbench::replay

#endif  // GOALBENCH_REPLAY_REPLAY_BUFFER_H_
