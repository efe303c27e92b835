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

#include "goalbench/numerics/polyak.h"

#include "goalbench/error.h"

namespace goalbench::numerics {

void PolyakUpdate(std::span<double> target, std::span<const double> online,
                  double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw ContractViolation("PolyakUpdate: tau must lie in [0, 1]");
  }
  if (target.size() != online.size()) {
    throw ContractViolation("PolyakUpdate: shape mismatch");
  }
  const double keep = 1.0 - tau;
  for (std::size_t i = 0; i < target.size(); ++i) {
    target[i] = keep * target[i] + tau * online[i];
  }
}

}  // namespace goalbench::numerics
