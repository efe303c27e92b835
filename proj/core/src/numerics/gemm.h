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

#ifndef GOALBENCH_NUMERICS_GEMM_H_
#define GOALBENCH_NUMERICS_GEMM_H_

#include <cstddef>

namespace goalbench::numerics::internal {

// Strided view of a read-only matrix operand: element (r, k) lives at
// data[r * row_stride + k * col_stride]. A transposed operand is the same
// buffer with the strides swapped.
struct Operand {
  const double* data;
  std::size_t row_stride;
  std::size_t col_stride;
};

// C = init + A * B, or C += A * B when `init` is null and `accumulate` is
// set. A is (m x k), B is row-major (k x n) with leading dimension ldb, C is
// row-major (m x n) with leading dimension ldc. `init` is a length-n row
// broadcast to every row of C. The summation order is fixed, so results
// are bitwise reproducible.
void Gemm(std::size_t m, std::size_t n, std::size_t k, Operand a,
          const double* b, std::size_t ldb, double* c, std::size_t ldc,
          const double* init, bool accumulate);

}  // namespace goalbench::numerics::internal

#endif  // GOALBENCH_NUMERICS_GEMM_H_
