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

#ifndef GOALBENCH_BENCH_TRAINER_H_
#define GOALBENCH_BENCH_TRAINER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "goalbench/agents/agent.h"
#include "goalbench/bench/curves.h"
#include "goalbench/bench/evaluation.h"
#include "goalbench/bench/run_config.h"
#include "goalbench/error.h"

namespace goalbench::bench {

struct TrainResult {
  std::vector<EvalRecord> curve;
  SuccessSummary final_test;
  std::filesystem::path curve_path;
  std::filesystem::path checkpoint_path;
  std::filesystem::path summary_path;
};

// Thrown after a diverged run has flushed its partial artifacts.
class TrainingAborted : public NonFiniteError {
 public:
  explicit TrainingAborted(const std::string& what) : NonFiniteError(what) {}
};

// Called after every evaluation with the record and the latest update
// diagnostics.
using ProgressFn =
    std::function<void(const EvalRecord&, const agents::UpdateDiagnostics&)>;

std::filesystem::path CurvePath(const std::filesystem::path& dir,
                                std::uint64_t seed);
std::filesystem::path CheckpointPath(const std::filesystem::path& dir,
                                     std::uint64_t seed);

// Runs reset / act / step / store-with-HER / update, evaluating the greedy
// policy every eval_interval steps. Writes curve_seed<N>.csv,
// checkpoint_seed<N>.bin and summary_seed<N>.txt into config.output_dir,
// and copies the summary to summary.txt.
// Every emitted byte is a function of the config alone.
TrainResult Train(const RunConfig& config, const ProgressFn& progress = {});

struct SweepResult {
  std::vector<TrainResult> runs;
  std::vector<AggregateRow> aggregate;
  std::filesystem::path aggregate_path;
  std::filesystem::path summary_path;
};

// Trains seeds config.seed .. config.seed + n_seeds - 1, then writes
// aggregate.csv and summary.txt.
SweepResult Sweep(const RunConfig& config, std::size_t n_seeds,
                  const ProgressFn& progress = {});

// Independent 64-bit stream seeds derived from one run seed.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

}  // namespace goalbench::bench

#endif  // GOALBENCH_BENCH_TRAINER_H_
