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

#include "goalbench/numerics/dense_matrix.h"

#include <algorithm>
#include <cmath>

#include "goalbench/error.h"

namespace goalbench::numerics {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix DenseMatrix::FromRows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  DenseMatrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw ContractViolation("DenseMatrix::FromRows: ragged rows");
    }
    std::copy(row.begin(), row.end(), m.Row(r).begin());
    ++r;
  }
  return m;
}

void DenseMatrix::Resize(std::size_t rows, std::size_t cols) {
  rows_ = rows;
  cols_ = cols;
  data_.resize(rows * cols);
}

void DenseMatrix::SetZero() { std::fill(data_.begin(), data_.end(), 0.0); }

bool DenseMatrix::AllFinite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

void ConcatColumns(const DenseMatrix& left, const DenseMatrix& right,
                   DenseMatrix& out) {
  if (left.rows() != right.rows()) {
    throw ContractViolation("ConcatColumns: row count mismatch");
  }
  out.Resize(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    auto dst = out.Row(r);
    auto l = left.Row(r);
    auto rr = right.Row(r);
    std::copy(l.begin(), l.end(), dst.begin());
    std::copy(rr.begin(), rr.end(), dst.begin() + l.size());
  }
}

}  // namespace goalbench::numerics
