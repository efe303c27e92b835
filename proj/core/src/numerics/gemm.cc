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

#include "gemm.h"

#include <algorithm>
#include <cstring>
#include <vector>

namespace goalbench::numerics::internal {
namespace {

// Native vector of doubles via the GCC/Clang vector extension; falls back to
// pairs of narrower registers when the target lacks AVX-512.
#if defined(__AVX512F__)
constexpr int kLanes = 8;
#else
constexpr int kLanes = 4;
#endif
typedef double Vec __attribute__((vector_size(kLanes * sizeof(double))));

inline Vec Load(const double* p) {
  Vec v;
  std::memcpy(&v, p, sizeof(v));
  return v;
}
inline void Store(double* p, Vec v) { std::memcpy(p, &v, sizeof(v)); }
inline Vec Broadcast(double x) { return Vec{} + x; }

constexpr int kRows = 8;
constexpr int kVecs = 2;
constexpr int kCols = kVecs * kLanes;

// kRows x kCols register tile. Accumulators stay in vector registers while
// the k loop streams one row segment of B and kRows broadcasts of A.
void VectorTile(std::size_t r0, std::size_t c0, std::size_t k, Operand a,
                const double* b, std::size_t ldb, double* c, std::size_t ldc,
                const double* init, bool accumulate) {
  Vec acc[kRows][kVecs];
  for (int r = 0; r < kRows; ++r) {
    const double* src = init != nullptr ? init + c0
                        : accumulate   ? c + (r0 + r) * ldc + c0
                                       : nullptr;
    for (int v = 0; v < kVecs; ++v) {
      acc[r][v] = src != nullptr ? Load(src + v * kLanes) : Vec{};
    }
  }
  const double* arow[kRows];
  for (int r = 0; r < kRows; ++r) arow[r] = a.data + (r0 + r) * a.row_stride;
  const std::size_t cs = a.col_stride;
  for (std::size_t kk = 0; kk < k; ++kk) {
    const double* bk = b + kk * ldb + c0;
    const Vec b0 = Load(bk);
    const Vec b1 = Load(bk + kLanes);
    const std::size_t ka = kk * cs;
#pragma GCC unroll 8
    for (int r = 0; r < kRows; ++r) {
      const Vec x = Broadcast(arow[r][ka]);
      acc[r][0] += x * b0;
      acc[r][1] += x * b1;
    }
  }
  for (int r = 0; r < kRows; ++r) {
    double* cr = c + (r0 + r) * ldc + c0;
    for (int v = 0; v < kVecs; ++v) Store(cr + v * kLanes, acc[r][v]);
  }
}

// One-vector tile over `width` <= kLanes columns of a packed B whose rows
// are padded to kLanes with zeros. Only `width` lanes are written back.
void NarrowTile(std::size_t r0, std::size_t c0, std::size_t width,
                std::size_t k, Operand a, const double* packed, double* c,
                std::size_t ldc, const double* init, bool accumulate) {
  Vec acc[kRows];
  for (int r = 0; r < kRows; ++r) {
    double lane[kLanes] = {};
    const double* src = init != nullptr ? init + c0
                        : accumulate   ? c + (r0 + r) * ldc + c0
                                       : nullptr;
    if (src != nullptr) std::memcpy(lane, src, width * sizeof(double));
    acc[r] = Load(lane);
  }
  const double* arow[kRows];
  for (int r = 0; r < kRows; ++r) arow[r] = a.data + (r0 + r) * a.row_stride;
  const std::size_t cs = a.col_stride;
  for (std::size_t kk = 0; kk < k; ++kk) {
    const Vec b0 = Load(packed + kk * kLanes);
    const std::size_t ka = kk * cs;
#pragma GCC unroll 8
    for (int r = 0; r < kRows; ++r) acc[r] += Broadcast(arow[r][ka]) * b0;
  }
  for (int r = 0; r < kRows; ++r) {
    double lane[kLanes];
    Store(lane, acc[r]);
    std::memcpy(c + (r0 + r) * ldc + c0, lane, width * sizeof(double));
  }
}

// Scalar edge handling for the rows and columns not covered by full tiles.
void ScalarBlock(std::size_t r_begin, std::size_t r_end, std::size_t c_begin,
                 std::size_t c_end, std::size_t k, Operand a, const double* b,
                 std::size_t ldb, double* c, std::size_t ldc,
                 const double* init, bool accumulate) {
  for (std::size_t r = r_begin; r < r_end; ++r) {
    double* cr = c + r * ldc;
    const double* ar = a.data + r * a.row_stride;
    for (std::size_t j = c_begin; j < c_end; ++j) {
      cr[j] = init != nullptr ? init[j] : (accumulate ? cr[j] : 0.0);
    }
    for (std::size_t kk = 0; kk < k; ++kk) {
      const double av = ar[kk * a.col_stride];
      const double* bk = b + kk * ldb;
      for (std::size_t j = c_begin; j < c_end; ++j) cr[j] += av * bk[j];
    }
  }
}

}  // namespace

void Gemm(std::size_t m, std::size_t n, std::size_t k, Operand a,
          const double* b, std::size_t ldb, double* c, std::size_t ldc,
          const double* init, bool accumulate) {
  const std::size_t m_full = m - m % kRows;
  const std::size_t n_full = n - n % kCols;
  for (std::size_t r0 = 0; r0 < m_full; r0 += kRows) {
    for (std::size_t c0 = 0; c0 < n_full; c0 += kCols) {
      VectorTile(r0, c0, k, a, b, ldb, c, ldc, init, accumulate);
    }
  }
  if (n_full < n && m_full > 0) {
    thread_local std::vector<double> packed;
    packed.resize(k * kLanes);
    for (std::size_t c0 = n_full; c0 < n; c0 += kLanes) {
      const std::size_t width = std::min<std::size_t>(kLanes, n - c0);
      std::fill(packed.begin(), packed.end(), 0.0);
      for (std::size_t kk = 0; kk < k; ++kk) {
        std::copy_n(b + kk * ldb + c0, width, packed.data() + kk * kLanes);
      }
      for (std::size_t r0 = 0; r0 < m_full; r0 += kRows) {
        NarrowTile(r0, c0, width, k, a, packed.data(), c, ldc, init,
                   accumulate);
      }
    }
  }
  if (m_full < m) {
    ScalarBlock(m_full, m, 0, n, k, a, b, ldb, c, ldc, init, accumulate);
  }
}

}  // namespace goalbench::numerics::internal
