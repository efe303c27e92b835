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

#include <benchmark/benchmark.h>

#include "goalbench/envsim/tabletop_env.h"

namespace {

using goalbench::envsim::TaskKind;

void BM_EnvStep(benchmark::State& state) {
  const auto kind = static_cast<TaskKind>(state.range(0));
  goalbench::envsim::TabletopEnv env(goalbench::envsim::DefaultTaskConfig(kind));
  std::vector<double> action(env.action_size(), 0.3);
  std::uint64_t seed = 0;
  env.Reset(seed);
  for (auto _ : state) {
    if (env.state().episode_over) env.Reset(++seed);
    benchmark::DoNotOptimize(env.Step(action));
  }
}
BENCHMARK(BM_EnvStep)
    ->Arg(static_cast<int>(TaskKind::kPush))
    ->Arg(static_cast<int>(TaskKind::kSlide))
    ->Arg(static_cast<int>(TaskKind::kPickAndPlace));

}  // namespace
