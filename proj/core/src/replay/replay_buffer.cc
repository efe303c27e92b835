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

#include "goalbench/replay/replay_buffer.h"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "goalbench/envsim/tabletop_env.h"
#include "goalbench/error.h"

namespace goalbench::replay {
namespace {

constexpr char kMagic[4] = {'G', 'B', 'R', 'B'};
constexpr std::uint32_t kVersion = 1;

// Record layout: obs | achieved | desired | action | reward | next_obs |
// next_achieved | terminated | relabeled.
struct Offsets {
  std::size_t obs, achieved, desired, action, reward, next_obs, next_achieved,
      terminated, relabeled, stride;
};

Offsets MakeOffsets(std::size_t obs_dim, std::size_t action_dim) {
  Offsets o{};
  o.obs = 0;
  o.achieved = o.obs + obs_dim;
  o.desired = o.achieved + 3;
  o.action = o.desired + 3;
  o.reward = o.action + action_dim;
  o.next_obs = o.reward + 1;
  o.next_achieved = o.next_obs + obs_dim;
  o.terminated = o.next_achieved + 3;
  o.relabeled = o.terminated + 1;
  o.stride = o.relabeled + 1;
  return o;
}

template <typename T>
void WritePod(std::ofstream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T ReadPod(std::ifstream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw FormatError("replay snapshot truncated");
  return v;
}

}  // namespace

ReplayBuffer::ReplayBuffer(std::size_t capacity, std::size_t obs_dim,
                           std::size_t action_dim)
    : capacity_(capacity),
      obs_dim_(obs_dim),
      action_dim_(action_dim),
      stride_(MakeOffsets(obs_dim, action_dim).stride) {
  if (capacity == 0) throw ContractViolation("ReplayBuffer: zero capacity");
}

std::size_t ReplayBuffer::Physical(std::size_t logical) const {
  const std::size_t oldest = size_ < capacity_ ? 0 : head_;
  return (oldest + logical) % capacity_;
}

std::span<const double> ReplayBuffer::Record(std::size_t physical) const {
  return {storage_.data() + physical * stride_, stride_};
}

void ReplayBuffer::Add(const Transition& t) {
  if (t.state_obs.observation.size() != obs_dim_ ||
      t.next_obs.observation.size() != obs_dim_ ||
      t.action.size() != action_dim_) {
    throw ContractViolation("ReplayBuffer::Add: transition shape mismatch");
  }
  if (t.state_obs.desired_goal != t.next_obs.desired_goal) {
    throw ContractViolation(
        "ReplayBuffer::Add: desired goal must be constant within a transition");
  }
  if (storage_.size() < (head_ + 1) * stride_) {
    storage_.resize((head_ + 1) * stride_);
  }
  const Offsets o = MakeOffsets(obs_dim_, action_dim_);
  double* r = storage_.data() + head_ * stride_;
  std::copy(t.state_obs.observation.begin(), t.state_obs.observation.end(),
            r + o.obs);
  std::copy(t.state_obs.achieved_goal.begin(), t.state_obs.achieved_goal.end(),
            r + o.achieved);
  std::copy(t.state_obs.desired_goal.begin(), t.state_obs.desired_goal.end(),
            r + o.desired);
  std::copy(t.action.begin(), t.action.end(), r + o.action);
  r[o.reward] = t.reward;
  std::copy(t.next_obs.observation.begin(), t.next_obs.observation.end(),
            r + o.next_obs);
  std::copy(t.next_obs.achieved_goal.begin(), t.next_obs.achieved_goal.end(),
            r + o.next_achieved);
  r[o.terminated] = t.terminated ? 1.0 : 0.0;
  r[o.relabeled] = t.relabeled ? 1.0 : 0.0;

  head_ = (head_ + 1) % capacity_;
  size_ = std::min(size_ + 1, capacity_);
}

Transition ReplayBuffer::Get(std::size_t index) const {
  if (index >= size_) throw ContractViolation("ReplayBuffer::Get: out of range");
  const Offsets o = MakeOffsets(obs_dim_, action_dim_);
  const auto r = Record(Physical(index));
  Transition t;
  t.state_obs.observation.assign(r.begin() + o.obs, r.begin() + o.obs + obs_dim_);
  std::copy_n(r.begin() + o.achieved, 3, t.state_obs.achieved_goal.begin());
  std::copy_n(r.begin() + o.desired, 3, t.state_obs.desired_goal.begin());
  t.action.assign(r.begin() + o.action, r.begin() + o.action + action_dim_);
  t.reward = r[o.reward];
  t.next_obs.observation.assign(r.begin() + o.next_obs,
                                r.begin() + o.next_obs + obs_dim_);
  std::copy_n(r.begin() + o.next_achieved, 3, t.next_obs.achieved_goal.begin());
  t.next_obs.desired_goal = t.state_obs.desired_goal;
  t.terminated = r[o.terminated] != 0.0;
  t.relabeled = r[o.relabeled] != 0.0;
  return t;
}

Minibatch ReplayBuffer::SampleBatch(std::size_t batch_size,
                                    std::mt19937_64& rng) const {
  Minibatch batch;
  SampleBatchInto(batch_size, rng, batch);
  return batch;
}

void ReplayBuffer::SampleBatchInto(std::size_t batch_size, std::mt19937_64& rng,
                                   Minibatch& out) const {
  if (batch_size == 0) throw ContractViolation("SampleBatch: batch_size is 0");
  if (size_ < batch_size) {
    throw ContractViolation("SampleBatch: buffer holds " +
                            std::to_string(size_) + " transitions, need " +
                            std::to_string(batch_size));
  }
  const Offsets o = MakeOffsets(obs_dim_, action_dim_);
  const std::size_t in = input_dim();
  out.observations.Resize(batch_size, in);
  out.next_observations.Resize(batch_size, in);
  out.actions.Resize(batch_size, action_dim_);
  out.rewards.resize(batch_size);
  out.terminated.resize(batch_size);
  std::uniform_int_distribution<std::size_t> pick(0, size_ - 1);
  for (std::size_t b = 0; b < batch_size; ++b) {
    const double* r = Record(Physical(pick(rng))).data();
    double* s = out.observations.Row(b).data();
    std::copy_n(r + o.obs, obs_dim_, s);
    std::copy_n(r + o.desired, 3, s + obs_dim_);
    double* n = out.next_observations.Row(b).data();
    std::copy_n(r + o.next_obs, obs_dim_, n);
    std::copy_n(r + o.desired, 3, n + obs_dim_);
    std::copy_n(r + o.action, action_dim_, out.actions.Row(b).data());
    out.rewards[b] = r[o.reward];
    out.terminated[b] = r[o.terminated];
  }
}

void ReplayBuffer::SaveSnapshot(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(kMagic, sizeof(kMagic));
  WritePod(out, kVersion);
  WritePod<std::uint64_t>(out, capacity_);
  WritePod<std::uint64_t>(out, obs_dim_);
  WritePod<std::uint64_t>(out, action_dim_);
  WritePod<std::uint64_t>(out, size_);
  for (std::size_t i = 0; i < size_; ++i) {
    const auto r = Record(Physical(i));
    out.write(reinterpret_cast<const char*>(r.data()),
              static_cast<std::streamsize>(r.size() * sizeof(double)));
  }
  if (!out) throw FormatError("failed writing " + path.string());
}

ReplayBuffer ReplayBuffer::LoadSnapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  char magic[4];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(magic)) != 0) {
    throw FormatError(path.string() + " is not a replay snapshot");
  }
  if (ReadPod<std::uint32_t>(in) != kVersion) {
    throw FormatError("unsupported replay snapshot version");
  }
  const auto capacity = ReadPod<std::uint64_t>(in);
  const auto obs_dim = ReadPod<std::uint64_t>(in);
  const auto action_dim = ReadPod<std::uint64_t>(in);
  const auto size = ReadPod<std::uint64_t>(in);
  if (size > capacity) throw FormatError("replay snapshot size exceeds capacity");
  ReplayBuffer buffer(capacity, obs_dim, action_dim);
  buffer.storage_.resize(size * buffer.stride_);
  in.read(reinterpret_cast<char*>(buffer.storage_.data()),
          static_cast<std::streamsize>(buffer.storage_.size() * sizeof(double)));
  if (!in) throw FormatError("replay snapshot truncated");
  buffer.size_ = size;
  buffer.head_ = size % capacity;
  return buffer;
}

RelabelFunctions RelabelFunctionsFor(const envsim::TaskConfig& config) {
  return {[config](const Vec3& a, const Vec3& d) {
            return envsim::ComputeReward(a, d, config);
          },
          [config](const Vec3& a, const Vec3& d) {
            return envsim::IsSuccess(a, d, config);
          }};
}

std::size_t StoreEpisode(ReplayBuffer& buffer,
                         const std::vector<Transition>& episode,
                         std::size_t her_k, std::mt19937_64& rng,
                         const RelabelFunctions& fns) {
  if (episode.empty()) throw ContractViolation("StoreEpisode: empty episode");
  const std::size_t length = episode.size();
  std::size_t written = 0;
  for (std::size_t t = 0; t < length; ++t) {
    buffer.Add(episode[t]);
    ++written;
    if (t + 1 >= length) continue;
    std::uniform_int_distribution<std::size_t> future(t + 1, length - 1);
    for (std::size_t k = 0; k < her_k; ++k) {
      const Vec3 goal = episode[future(rng)].state_obs.achieved_goal;
      Transition copy = episode[t];
      copy.state_obs.desired_goal = goal;
      copy.next_obs.desired_goal = goal;
      copy.reward = fns.reward(copy.next_obs.achieved_goal, goal);
      copy.terminated = fns.terminated(copy.next_obs.achieved_goal, goal);
      copy.relabeled = true;
      buffer.Add(copy);
      ++written;
    }
  }
  return written;
}

}  // namespace goalbench::replay
