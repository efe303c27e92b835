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

#include <random>

#include <benchmark/benchmark.h>

#include "goalbench/agents/agent.h"
#include "goalbench/envsim/types.h"
#include "goalbench/replay/replay_buffer.h"

namespace {

using goalbench::agents::Algorithm;

goalbench::replay::Minibatch RandomBatch(std::size_t batch,
                                         const goalbench::agents::AgentDims& d,
                                         std::mt19937_64& rng) {
  using goalbench::agents::StandardNormalMatrix;
  goalbench::replay::Minibatch b;
  b.observations = StandardNormalMatrix(batch, d.input_dim(), rng);
  b.next_observations = StandardNormalMatrix(batch, d.input_dim(), rng);
  b.actions = StandardNormalMatrix(batch, d.action_dim, rng);
  b.rewards.assign(batch, -1.0);
  b.terminated.assign(batch, 0.0);
  return b;
}

void BM_AgentUpdate(benchmark::State& state) {
  const auto algo = static_cast<Algorithm>(state.range(0));
  const auto width = static_cast<std::size_t>(state.range(1));
  const auto batch = static_cast<std::size_t>(state.range(2));
  goalbench::agents::AgentDims dims{18, 3, 3};
  goalbench::agents::AlgoHyperParams params;
  params.hidden_sizes = {width, width};
  params.batch_size = batch;
  auto agent = goalbench::agents::MakeAgent(algo, dims, params, 7);
  std::mt19937_64 rng(3);
  const auto b = RandomBatch(batch, dims, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(agent->Update(b, rng));
  }
  state.SetLabel(std::string(goalbench::agents::AlgorithmName(algo)));
}
BENCHMARK(BM_AgentUpdate)
    ->Args({static_cast<int>(Algorithm::kDdpg), 64, 256})
    ->Args({static_cast<int>(Algorithm::kSac), 64, 256})
    ->Args({static_cast<int>(Algorithm::kTqc), 64, 256})
    ->Unit(benchmark::kMillisecond);

void BM_SelectAction(benchmark::State& state) {
  goalbench::agents::AgentDims dims{18, 3, 3};
  goalbench::agents::AlgoHyperParams params;
  params.hidden_sizes = {64, 64};
  auto agent = goalbench::agents::MakeAgent(Algorithm::kTqc, dims, params, 7);
  std::vector<double> input(dims.input_dim(), 0.1);
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(agent->SelectAction(input, true, rng));
  }
}
BENCHMARK(BM_SelectAction);

}  // namespace
