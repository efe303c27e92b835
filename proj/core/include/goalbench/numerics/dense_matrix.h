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

#ifndef GOALBENCH_NUMERICS_DENSE_MATRIX_H_
#define GOALBENCH_NUMERICS_DENSE_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace goalbench::numerics {

// Row-major matrix of 64-bit reals. Used for minibatches (one row per
// sample) and for the per-layer activations recorded during a forward pass.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);

  static DenseMatrix FromRows(
      std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<double> Row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> Row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  // Reshapes, keeping the allocation when possible. Contents are unspecified
  // afterwards unless `fill` is requested through SetZero().
  void Resize(std::size_t rows, std::size_t cols);
  void SetZero();
  bool AllFinite() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Non-owning row-major view, used to expose slices of a flat parameter
// buffer as matrices.
template <typename T>
struct MatrixView {
  std::span<T> data;
  std::size_t rows = 0;
  std::size_t cols = 0;

  T& operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
  std::span<T> Row(std::size_t r) const {
    return data.subspan(r * cols, cols);
  }
};

// Writes [left | right] row by row into `out`.
void ConcatColumns(const DenseMatrix& left, const DenseMatrix& right,
                   DenseMatrix& out);

}  // namespace goalbench::numerics

#endif  // GOALBENCH_NUMERICS_DENSE_MATRIX_H_
