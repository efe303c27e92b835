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

#ifndef GOALBENCH_NUMERICS_POLYAK_H_
#define GOALBENCH_NUMERICS_POLYAK_H_

#include <span>

namespace goalbench::numerics {

// target <- (1 - tau) * target + tau * online, element-wise. tau in [0, 1].
void PolyakUpdate(std::span<double> target, std::span<const double> online,
                  double tau);

}  // namespace goalbench::numerics

#endif  // GOALBENCH_NUMERICS_POLYAK_H_
