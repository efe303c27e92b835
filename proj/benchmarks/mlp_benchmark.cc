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
#include "goalbench/numerics/mlp.h"

namespace {

using goalbench::numerics::Activation;
using goalbench::numerics::DenseMatrix;
using goalbench::numerics::Mlp;
using goalbench::numerics::MlpTape;

Mlp MakeNet(std::size_t in, std::size_t width, std::size_t out) {
  Mlp net({in, width, width, out}, Activation::kIdentity);
  std::mt19937_64 rng(1);
  net.InitializeUniform(rng);
  return net;
}

void BM_MlpForward(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const auto batch = static_cast<std::size_t>(state.range(1));
  const Mlp net = MakeNet(25, width, 1);
  std::mt19937_64 rng(2);
  const DenseMatrix x = goalbench::agents::StandardNormalMatrix(batch, 25, rng);
  MlpTape tape;
  for (auto _ : state) {
    net.Forward(x, tape);
    benchmark::DoNotOptimize(tape.output().data().data());
  }
  state.SetItemsProcessed(state.iterations() * batch);
}
BENCHMARK(BM_MlpForward)->Args({64, 256})->Args({256, 512});

void BM_MlpBackward(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const auto batch = static_cast<std::size_t>(state.range(1));
  const Mlp net = MakeNet(25, width, 1);
  std::mt19937_64 rng(2);
  const DenseMatrix x = goalbench::agents::StandardNormalMatrix(batch, 25, rng);
  const DenseMatrix up = goalbench::agents::StandardNormalMatrix(batch, 1, rng);
  MlpTape tape;
  net.Forward(x, tape);
  std::vector<double> grads(net.num_parameters());
  DenseMatrix input_grad;
  for (auto _ : state) {
    net.Backward(tape, up, grads, &input_grad);
    benchmark::DoNotOptimize(grads.data());
  }
  state.SetItemsProcessed(state.iterations() * batch);
}
BENCHMARK(BM_MlpBackward)->Args({64, 256})->Args({256, 512});

void BM_MlpForwardSingle(benchmark::State& state) {
  const Mlp net = MakeNet(25, static_cast<std::size_t>(state.range(0)), 4);
  std::vector<double> x(25, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(net.Forward(x));
}
BENCHMARK(BM_MlpForwardSingle)->Arg(64)->Arg(256);

}  // namespace
