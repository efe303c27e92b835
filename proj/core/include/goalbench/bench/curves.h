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

#ifndef GOALBENCH_BENCH_CURVES_H_
#define GOALBENCH_BENCH_CURVES_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <vector>

#include "goalbench/bench/evaluation.h"

namespace goalbench::bench {

// CSV header: step,success_rate,mean_return,seed
void WriteCurveCsv(std::ostream& out, const std::vector<EvalRecord>& records);
void WriteCurveCsv(const std::filesystem::path& path,
                   const std::vector<EvalRecord>& records);
std::vector<EvalRecord> ReadCurveCsv(const std::filesystem::path& path);

// Appends rows as training progresses, flushing after each one so an aborted
// run leaves a valid partial curve.
class CurveWriter {
 public:
  explicit CurveWriter(const std::filesystem::path& path);
  void Append(const EvalRecord& record);

 private:
  std::ofstream out_;
};

struct AggregateRow {
  std::size_t step = 0;
  double median_success_rate = 0.0;
  double std_success_rate = 0.0;  // population standard deviation
  double min_success_rate = 0.0;
  double max_success_rate = 0.0;
  std::size_t n_seeds = 0;
};

double Median(std::vector<double> values);

// One row per distinct step across all curves, ordered by step.
std::vector<AggregateRow> AggregateCurves(
    const std::vector<std::vector<EvalRecord>>& curves);

// CSV header: step,median_success_rate,std_success_rate,min_success_rate,
// max_success_rate,n_seeds
void WriteAggregateCsv(const std::filesystem::path& path,
                       const std::vector<AggregateRow>& rows);

// Reads every curve_seed<N>.csv in `dir`.
std::vector<std::vector<EvalRecord>> ReadCurveDirectory(
    const std::filesystem::path& dir);

}  // namespace goalbench::bench

#endif  // GOALBENCH_BENCH_CURVES_H_
