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

#include "goalbench/agents/checkpoint.h"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "goalbench/error.h"

namespace goalbench::agents {

class CheckpointAccess {
 public:
  static void Restore(Agent& agent, std::uint64_t update_count,
                      double log_alpha, numerics::AdamState alpha_adam) {
    agent.update_count_ = update_count;
    agent.log_alpha_ = log_alpha;
    agent.alpha_adam_ = std::move(alpha_adam);
  }
};

namespace {

constexpr char kMagic[4] = {'G', 'B', 'C', 'K'};
constexpr std::uint32_t kVersion = 1;
// Guards allocations when reading a corrupt size field.
constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 32;

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}
  template <typename T>
  void Pod(const T& v) {
    out_.write(reinterpret_cast<const char*>(&v), sizeof(T));
  }
  void U64(std::uint64_t v) { Pod(v); }
  void F64(double v) { Pod(v); }
  void Reals(std::span<const double> v) {
    U64(v.size());
    out_.write(reinterpret_cast<const char*>(v.data()),
               static_cast<std::streamsize>(v.size() * sizeof(double)));
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  template <typename T>
  T Pod() {
    T v{};
    in_.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in_) throw FormatError("checkpoint truncated");
    return v;
  }
  std::uint64_t U64() { return Pod<std::uint64_t>(); }
  double F64() { return Pod<double>(); }
  std::uint64_t Count() {
    const std::uint64_t n = U64();
    if (n > kMaxElements) throw FormatError("checkpoint: implausible size field");
    return n;
  }
  std::vector<double> Reals() {
    std::vector<double> v(Count());
    in_.read(reinterpret_cast<char*>(v.data()),
             static_cast<std::streamsize>(v.size() * sizeof(double)));
    if (!in_) throw FormatError("checkpoint truncated");
    return v;
  }

 private:
  std::istream& in_;
};

void WriteAdam(Writer& w, const numerics::AdamState& a) {
  w.U64(a.step_count);
  w.F64(a.config.learning_rate);
  w.F64(a.config.beta1);
  w.F64(a.config.beta2);
  w.F64(a.config.epsilon);
  w.Reals(a.first_moment);
  w.Reals(a.second_moment);
}

numerics::AdamState ReadAdam(Reader& r) {
  numerics::AdamState a;
  a.step_count = r.U64();
  a.config.learning_rate = r.F64();
  a.config.beta1 = r.F64();
  a.config.beta2 = r.F64();
  a.config.epsilon = r.F64();
  a.first_moment = r.Reals();
  a.second_moment = r.Reals();
  if (a.first_moment.size() != a.second_moment.size()) {
    throw FormatError("checkpoint: Adam moment sizes differ");
  }
  return a;
}

}  // namespace

void SaveCheckpoint(const Agent& agent, std::ostream& out) {
  Writer w(out);
  out.write(kMagic, sizeof(kMagic));
  w.Pod(kVersion);
  w.Pod(static_cast<std::uint32_t>(agent.algorithm()));
  const AgentDims& d = agent.dims();
  w.U64(d.obs_dim);
  w.U64(d.goal_dim);
  w.U64(d.action_dim);

  const AlgoHyperParams& p = agent.hyper_params();
  w.F64(p.gamma);
  w.F64(p.learning_rate);
  w.F64(p.polyak_tau);
  w.U64(p.batch_size);
  w.F64(p.action_noise_std);
  w.Pod(static_cast<std::uint8_t>(p.noise_on_stochastic_policy ? 1 : 0));
  w.U64(p.policy_delay);
  w.F64(p.entropy_target);
  w.F64(p.initial_log_alpha);
  w.U64(p.hidden_sizes.size());
  for (std::size_t h : p.hidden_sizes) w.U64(h);
  w.U64(p.n_critics);
  w.U64(p.n_quantiles);
  w.U64(p.drop_per_critic);

  w.U64(agent.update_count());
  w.F64(agent.log_alpha());
  WriteAdam(w, agent.alpha_adam());

  const auto slots = agent.Slots();
  w.U64(slots.size());
  for (const NetworkSlot& slot : slots) {
    const auto& sizes = slot.net->layer_sizes();
    w.U64(sizes.size());
    for (std::size_t s : sizes) w.U64(s);
    w.Pod(static_cast<std::uint8_t>(slot.net->output_activation()));
    w.Reals(slot.net->parameters());
    w.Pod(static_cast<std::uint8_t>(slot.adam != nullptr ? 1 : 0));
    if (slot.adam != nullptr) WriteAdam(w, *slot.adam);
  }
  if (!out) throw FormatError("failed writing checkpoint");
}

void SaveCheckpoint(const Agent& agent, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  SaveCheckpoint(agent, out);
}

std::unique_ptr<Agent> LoadCheckpoint(std::istream& in) {
  char magic[4];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(magic)) != 0) {
    throw FormatError("not a goalbench checkpoint");
  }
  Reader r(in);
  if (r.Pod<std::uint32_t>() != kVersion) {
    throw FormatError("unsupported checkpoint version");
  }
  const auto algo_raw = r.Pod<std::uint32_t>();
  if (algo_raw > static_cast<std::uint32_t>(Algorithm::kTqc)) {
    throw FormatError("checkpoint: unknown algorithm id");
  }
  const auto algorithm = static_cast<Algorithm>(algo_raw);
  AgentDims d;
  d.obs_dim = r.Count();
  d.goal_dim = r.Count();
  d.action_dim = r.Count();

  AlgoHyperParams p;
  p.gamma = r.F64();
  p.learning_rate = r.F64();
  p.polyak_tau = r.F64();
  p.batch_size = r.Count();
  p.action_noise_std = r.F64();
  p.noise_on_stochastic_policy = r.Pod<std::uint8_t>() != 0;
  p.policy_delay = r.Count();
  p.entropy_target = r.F64();
  p.initial_log_alpha = r.F64();
  p.hidden_sizes.resize(r.Count());
  for (std::size_t& h : p.hidden_sizes) h = r.Count();
  p.n_critics = r.Count();
  p.n_quantiles = r.Count();
  p.drop_per_critic = r.Count();

  const std::uint64_t update_count = r.U64();
  const double log_alpha = r.F64();
  numerics::AdamState alpha_adam = ReadAdam(r);

  std::unique_ptr<Agent> agent;
  try {
    agent = MakeAgent(algorithm, d, p, 0);
  } catch (const ContractViolation& e) {
    throw FormatError(std::string("checkpoint: invalid agent description: ") +
                      e.what());
  }
  auto slots = agent->MutableSlots();
  if (r.Count() != slots.size()) {
    throw FormatError("checkpoint: network count does not match algorithm");
  }
  for (MutableNetworkSlot& slot : slots) {
    std::vector<std::size_t> sizes(r.Count());
    for (std::size_t& s : sizes) s = r.Count();
    const auto activation = r.Pod<std::uint8_t>();
    if (sizes != slot.net->layer_sizes() ||
        activation != static_cast<std::uint8_t>(slot.net->output_activation())) {
      throw FormatError("checkpoint: shape mismatch for network " + slot.name);
    }
    const std::vector<double> params = r.Reals();
    if (params.size() != slot.net->num_parameters()) {
      throw FormatError("checkpoint: parameter count mismatch for " + slot.name);
    }
    std::copy(params.begin(), params.end(), slot.net->parameters().begin());
    const bool has_adam = r.Pod<std::uint8_t>() != 0;
    if (has_adam != (slot.adam != nullptr)) {
      throw FormatError("checkpoint: optimizer state mismatch for " + slot.name);
    }
    if (has_adam) {
      numerics::AdamState adam = ReadAdam(r);
      if (adam.first_moment.size() != params.size()) {
        throw FormatError("checkpoint: optimizer size mismatch for " + slot.name);
      }
      *slot.adam = std::move(adam);
    }
  }
  CheckpointAccess::Restore(*agent, update_count, log_alpha, std::move(alpha_adam));
  return agent;
}

std::unique_ptr<Agent> LoadCheckpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open checkpoint " + path.string());
  return LoadCheckpoint(in);
}

}  // namespace goalbench::agents
