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

#ifndef GOALBENCH_BENCH_SCRIPTED_POLICY_H_
#define GOALBENCH_BENCH_SCRIPTED_POLICY_H_

#include <vector>

#include "goalbench/envsim/types.h"

namespace goalbench::bench {

// Hand-written controllers that read the full simulator state. They exist
// to show every task is solvable under the simulator's dynamics, without
// any learning involved.
std::vector<double> ScriptedAction(const envsim::EnvState& state,
                                   const envsim::TaskConfig& config);

}  // namespace goalbench::bench

#endif  // GOALBENCH_BENCH_SCRIPTED_POLICY_H_
