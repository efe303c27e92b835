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

#include "goalbench/bench/run_config.h"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "goalbench/error.h"

namespace goalbench::bench {
namespace {

using envsim::KeyValues;

std::size_t ParseCount(const std::string& key, const std::string& value) {
  std::uint64_t exact = 0;
  const char* end = value.data() + value.size();
  if (auto [ptr, ec] = std::from_chars(value.data(), end, exact);
      ec == std::errc() && ptr == end) {
    return exact;
  }
  std::istringstream in(value);
  double v = 0.0;  // also accepts "5e5"
  in >> v;
  if (in.fail() || !(in >> std::ws).eof() || v < 0.0 ||
      v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw FormatError("config key '" + key +
                      "': expected a non-negative integer, got '" + value + "'");
  }
  return static_cast<std::size_t>(v);
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

bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw FormatError("config key '" + key + "': expected true or false, got '" +
                    value + "'");
}

std::vector<std::size_t> ParseSizes(const std::string& key,
                                    const std::string& value) {
  std::string normalized = value;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  std::vector<std::size_t> out;
  std::string token;
  while (in >> token) out.push_back(ParseCount(key, token));
  if (out.empty()) {
    throw FormatError("config key '" + key + "': expected layer widths");
  }
  return out;
}

template <typename Fn>
void Take(KeyValues& values, const char* key, Fn&& apply) {
  auto it = values.find(key);
  if (it == values.end()) return;
  apply(it->second);
  values.erase(it);
}

bool IsTaskKey(const std::string& key) {
  static const KeyValues kTaskKeys = envsim::ParseKeyValues(
      envsim::FormatTaskConfig(envsim::DefaultTaskConfig(envsim::TaskKind::kPush)));
  return kTaskKeys.contains(key);
}

void ApplyTaskDefaults(RunConfig& c) {
  using envsim::TaskKind;
  if (c.task.task_kind == TaskKind::kSlide) {
    c.total_steps = 1000000;
    c.agent.hidden_sizes = {512, 512, 512};
    c.agent.batch_size = 2048;
  } else {
    c.total_steps = 500000;
    c.agent.hidden_sizes = {256, 256, 256};
    c.agent.batch_size = 512;
  }
}

}  // namespace

void RunConfig::Validate() const {
  task.Validate();
  agent.Validate();
  if (eval_interval == 0) throw ContractViolation("eval_interval must be > 0");
  if (eval_episodes == 0) throw ContractViolation("eval_episodes must be > 0");
  if (buffer_capacity == 0) {
    throw ContractViolation("buffer_size must be > 0");
  }
  if (buffer_capacity < agent.batch_size) {
    throw ContractViolation("buffer_size must be at least batch_size");
  }
}

RunConfig DefaultRunConfig(envsim::TaskKind task, agents::Algorithm algorithm) {
  RunConfig c;
  c.task = envsim::DefaultTaskConfig(task);
  c.algorithm = algorithm;
  ApplyTaskDefaults(c);
  return c;
}

void ApplyKeyValues(KeyValues values, RunConfig& c) {
  KeyValues task_values;
  for (auto it = values.begin(); it != values.end();) {
    if (it->first == "task" || IsTaskKey(it->first)) {
      task_values.insert(*it);
      it = values.erase(it);
    } else {
      ++it;
    }
  }
  if (!task_values.empty()) {
    if (task_values.contains("task")) {
      c.task = envsim::TaskConfigFromKeyValues(task_values);
      ApplyTaskDefaults(c);
    } else {
      KeyValues base =
          envsim::ParseKeyValues(envsim::FormatTaskConfig(c.task));
      for (const auto& [k, v] : task_values) base[k] = v;
      c.task = envsim::TaskConfigFromKeyValues(base);
    }
  }

  Take(values, "algo", [&](const std::string& v) {
    c.algorithm = agents::ParseAlgorithm(v);
  });
  Take(values, "seed", [&](const std::string& v) { c.seed = ParseCount("seed", v); });
  Take(values, "steps",
       [&](const std::string& v) { c.total_steps = ParseCount("steps", v); });
  Take(values, "eval_interval", [&](const std::string& v) {
    c.eval_interval = ParseCount("eval_interval", v);
  });
  Take(values, "eval_episodes", [&](const std::string& v) {
    c.eval_episodes = ParseCount("eval_episodes", v);
  });
  Take(values, "final_test_episodes", [&](const std::string& v) {
    c.final_test_episodes = ParseCount("final_test_episodes", v);
  });
  Take(values, "buffer_size", [&](const std::string& v) {
    c.buffer_capacity = ParseCount("buffer_size", v);
  });
  Take(values, "her_k", [&](const std::string& v) { c.her_k = ParseCount("her_k", v); });
  Take(values, "warmup_steps", [&](const std::string& v) {
    c.warmup_steps = ParseCount("warmup_steps", v);
  });
  Take(values, "batch_size", [&](const std::string& v) {
    c.agent.batch_size = ParseCount("batch_size", v);
  });
  Take(values, "hidden_sizes", [&](const std::string& v) {
    c.agent.hidden_sizes = ParseSizes("hidden_sizes", v);
  });
  Take(values, "learning_rate", [&](const std::string& v) {
    c.agent.learning_rate = ParseReal("learning_rate", v);
  });
  Take(values, "gamma",
       [&](const std::string& v) { c.agent.gamma = ParseReal("gamma", v); });
  Take(values, "polyak_tau", [&](const std::string& v) {
    c.agent.polyak_tau = ParseReal("polyak_tau", v);
  });
  Take(values, "action_noise_std", [&](const std::string& v) {
    c.agent.action_noise_std = ParseReal("action_noise_std", v);
  });
  Take(values, "noise_on_stochastic_policy", [&](const std::string& v) {
    c.agent.noise_on_stochastic_policy =
        ParseBool("noise_on_stochastic_policy", v);
  });
  Take(values, "policy_delay", [&](const std::string& v) {
    c.agent.policy_delay = ParseCount("policy_delay", v);
  });
  Take(values, "entropy_target", [&](const std::string& v) {
    c.agent.entropy_target = ParseReal("entropy_target", v);
  });
  Take(values, "initial_log_alpha", [&](const std::string& v) {
    c.agent.initial_log_alpha = ParseReal("initial_log_alpha", v);
  });
  Take(values, "n_critics", [&](const std::string& v) {
    c.agent.n_critics = ParseCount("n_critics", v);
  });
  Take(values, "n_quantiles", [&](const std::string& v) {
    c.agent.n_quantiles = ParseCount("n_quantiles", v);
  });
  Take(values, "drop_per_critic", [&](const std::string& v) {
    c.agent.drop_per_critic = ParseCount("drop_per_critic", v);
  });
  Take(values, "out", [&](const std::string& v) { c.output_dir = v; });
  if (!values.empty()) {
    throw FormatError("unknown config key '" + values.begin()->first + "'");
  }
  c.Validate();
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  KeyValues values = envsim::ReadKeyValueFile(path);
  envsim::TaskKind kind = envsim::TaskKind::kPush;
  if (auto it = values.find("task"); it != values.end()) {
    kind = envsim::ParseTaskKind(it->second);
  }
  RunConfig c = DefaultRunConfig(kind, agents::Algorithm::kTqc);
  ApplyKeyValues(std::move(values), c);
  return c;
}

std::string FormatRunConfig(const RunConfig& c) {
  std::string out = envsim::FormatTaskConfig(c.task);
  out += fmt::format("algo = {}\n", agents::AlgorithmName(c.algorithm));
  out += fmt::format("seed = {}\n", c.seed);
  out += fmt::format("steps = {}\n", c.total_steps);
  out += fmt::format("eval_interval = {}\n", c.eval_interval);
  out += fmt::format("eval_episodes = {}\n", c.eval_episodes);
  out += fmt::format("final_test_episodes = {}\n", c.final_test_episodes);
  out += fmt::format("buffer_size = {}\n", c.buffer_capacity);
  out += fmt::format("her_k = {}\n", c.her_k);
  out += fmt::format("warmup_steps = {}\n", c.warmup_steps);
  const auto& a = c.agent;
  out += fmt::format("batch_size = {}\n", a.batch_size);
  out += fmt::format("hidden_sizes = {}\n", fmt::join(a.hidden_sizes, " "));
  out += fmt::format("learning_rate = {}\n", a.learning_rate);
  out += fmt::format("gamma = {}\n", a.gamma);
  out += fmt::format("polyak_tau = {}\n", a.polyak_tau);
  out += fmt::format("action_noise_std = {}\n", a.action_noise_std);
  out += fmt::format("noise_on_stochastic_policy = {}\n",
                     a.noise_on_stochastic_policy);
  out += fmt::format("policy_delay = {}\n", a.policy_delay);
  if (!std::isnan(a.entropy_target)) {
    out += fmt::format("entropy_target = {}\n", a.entropy_target);
  }
  out += fmt::format("initial_log_alpha = {}\n", a.initial_log_alpha);
  out += fmt::format("n_critics = {}\n", a.n_critics);
  out += fmt::format("n_quantiles = {}\n", a.n_quantiles);
  out += fmt::format("drop_per_critic = {}\n", a.drop_per_critic);
  return out;
}

}  // namespace goalbench::bench
