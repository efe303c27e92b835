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

#include "goalbench/numerics/mlp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "goalbench/error.h"
#include "gemm.h"

namespace goalbench::numerics {
namespace {

void Activate(Activation act, DenseMatrix& m) {
  auto data = m.data();
  switch (act) {
    case Activation::kIdentity:
      break;
    case Activation::kRelu:
      for (double& v : data) v = v > 0.0 ? v : 0.0;
      break;
    case Activation::kTanh:
      for (double& v : data) v = std::tanh(v);
      break;
  }
}

// Multiplies `grad` in place by the activation derivative, expressed through
// the post-activation values `out`.
void ApplyActivationDerivative(Activation act, const DenseMatrix& out,
                               DenseMatrix& grad) {
  auto g = grad.data();
  auto y = out.data();
  switch (act) {
    case Activation::kIdentity:
      break;
    case Activation::kRelu:
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(y[i] > 0.0)) g[i] = 0.0;
      }
      break;
    case Activation::kTanh:
      for (std::size_t i = 0; i < g.size(); ++i) g[i] *= 1.0 - y[i] * y[i];
      break;
  }
}

// y = x * W + b for every row of x; W is (in x out) row-major.
void AffineRows(const DenseMatrix& x, const double* w, const double* b,
                std::size_t out, DenseMatrix& y) {
  y.Resize(x.rows(), out);
  internal::Gemm(x.rows(), out, x.cols(), {x.data().data(), x.cols(), 1}, w,
                 out, y.data().data(), out, b, false);
}

}  // namespace

Mlp::Mlp(std::vector<std::size_t> layer_sizes, Activation output_activation)
    : layer_sizes_(std::move(layer_sizes)),
      output_activation_(output_activation) {
  if (layer_sizes_.size() < 2) {
    throw ContractViolation("Mlp: need at least input and output sizes");
  }
  std::size_t offset = 0;
  for (std::size_t l = 0; l + 1 < layer_sizes_.size(); ++l) {
    if (layer_sizes_[l] == 0 || layer_sizes_[l + 1] == 0) {
      throw ContractViolation("Mlp: zero-width layer");
    }
    weight_offsets_.push_back(offset);
    offset += layer_sizes_[l] * layer_sizes_[l + 1];
    bias_offsets_.push_back(offset);
    offset += layer_sizes_[l + 1];
  }
  params_.assign(offset, 0.0);
}

void Mlp::InitializeUniform(std::mt19937_64& rng) {
  for (std::size_t l = 0; l < num_layers(); ++l) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(layer_sizes_[l]));
    std::uniform_real_distribution<double> dist(-bound, bound);
    for (double& v : weights(l).data) v = dist(rng);
    for (double& v : bias(l)) v = dist(rng);
  }
}

MatrixView<double> Mlp::weights(std::size_t layer) {
  const std::size_t in = layer_sizes_[layer];
  const std::size_t out = layer_sizes_[layer + 1];
  return {std::span<double>(params_).subspan(weight_offsets_[layer], in * out),
          in, out};
}

MatrixView<const double> Mlp::weights(std::size_t layer) const {
  const std::size_t in = layer_sizes_[layer];
  const std::size_t out = layer_sizes_[layer + 1];
  return {std::span<const double>(params_).subspan(weight_offsets_[layer],
                                                   in * out),
          in, out};
}

std::span<double> Mlp::bias(std::size_t layer) {
  return std::span<double>(params_).subspan(bias_offsets_[layer],
                                            layer_sizes_[layer + 1]);
}

std::span<const double> Mlp::bias(std::size_t layer) const {
  return std::span<const double>(params_).subspan(bias_offsets_[layer],
                                                  layer_sizes_[layer + 1]);
}

Activation Mlp::ActivationFor(std::size_t layer) const {
  return layer + 1 == num_layers() ? output_activation_ : Activation::kRelu;
}

std::vector<double> Mlp::Forward(std::span<const double> input) const {
  if (input.size() != input_size()) {
    throw ContractViolation("Mlp::Forward: input length " +
                            std::to_string(input.size()) + " != " +
                            std::to_string(input_size()));
  }
  std::vector<double> x(input.begin(), input.end());
  std::vector<double> y;
  for (std::size_t l = 0; l < num_layers(); ++l) {
    const auto w = weights(l);
    const auto b = bias(l);
    y.assign(b.begin(), b.end());
    for (std::size_t k = 0; k < w.rows; ++k) {
      const double a = x[k];
      const auto wk = w.Row(k);
      for (std::size_t o = 0; o < w.cols; ++o) y[o] += a * wk[o];
    }
    switch (ActivationFor(l)) {
      case Activation::kIdentity:
        break;
      case Activation::kRelu:
        for (double& v : y) v = v > 0.0 ? v : 0.0;
        break;
      case Activation::kTanh:
        for (double& v : y) v = std::tanh(v);
        break;
    }
    x.swap(y);
  }
  return x;
}

void Mlp::Forward(const DenseMatrix& input, MlpTape& tape) const {
  if (input.cols() != input_size()) {
    throw ContractViolation("Mlp::Forward: input width " +
                            std::to_string(input.cols()) + " != " +
                            std::to_string(input_size()));
  }
  tape.activations.resize(num_layers() + 1);
  tape.activations[0] = input;
  for (std::size_t l = 0; l < num_layers(); ++l) {
    AffineRows(tape.activations[l], params_.data() + weight_offsets_[l],
               params_.data() + bias_offsets_[l], layer_sizes_[l + 1],
               tape.activations[l + 1]);
    Activate(ActivationFor(l), tape.activations[l + 1]);
  }
}

void Mlp::Backward(const MlpTape& tape, const DenseMatrix& upstream,
                   std::span<double> param_grads,
                   DenseMatrix* input_grad) const {
  if (tape.activations.size() != num_layers() + 1) {
    throw ContractViolation("Mlp::Backward: tape does not match network");
  }
  const std::size_t rows = tape.activations[0].rows();
  if (upstream.rows() != rows || upstream.cols() != output_size()) {
    throw ContractViolation("Mlp::Backward: upstream shape mismatch");
  }
  const bool want_params = !param_grads.empty();
  if (want_params && param_grads.size() != num_parameters()) {
    throw ContractViolation("Mlp::Backward: gradient buffer size mismatch");
  }

  DenseMatrix delta = upstream;
  ApplyActivationDerivative(output_activation_, tape.output(), delta);
  DenseMatrix next_delta;
  std::vector<double> transposed;

  for (std::size_t l = num_layers(); l-- > 0;) {
    const std::size_t in = layer_sizes_[l];
    const std::size_t out = layer_sizes_[l + 1];
    const DenseMatrix& x = tape.activations[l];
    double* gw = want_params ? param_grads.data() + weight_offsets_[l] : nullptr;
    double* gb = want_params ? param_grads.data() + bias_offsets_[l] : nullptr;

    if (want_params) {
      // dW += x^T * delta, db += column sums of delta.
      internal::Gemm(in, out, rows, {x.data().data(), 1, in},
                     delta.data().data(), out, gw, out, nullptr, true);
      for (std::size_t i = 0; i < rows; ++i) {
        const double* dr = delta.Row(i).data();
        for (std::size_t o = 0; o < out; ++o) gb[o] += dr[o];
      }
    }

    if (l == 0 && input_grad == nullptr) break;

    // delta_prev = delta * W^T, through a transposed copy so B stays
    // row-major.
    const double* w = params_.data() + weight_offsets_[l];
    transposed.resize(in * out);
    for (std::size_t k = 0; k < in; ++k) {
      for (std::size_t o = 0; o < out; ++o) transposed[o * in + k] = w[k * out + o];
    }
    next_delta.Resize(rows, in);
    internal::Gemm(rows, in, out, {delta.data().data(), out, 1},
                   transposed.data(), in, next_delta.data().data(), in,
                   nullptr, false);
    if (l > 0) {
      ApplyActivationDerivative(Activation::kRelu, x, next_delta);
      std::swap(delta, next_delta);
    } else {
      *input_grad = std::move(next_delta);
    }
  }
}

MlpGradient ComputeMlpGradient(const Mlp& net, std::span<const double> input,
                               std::span<const double> upstream) {
  if (input.size() != net.input_size()) {
    throw ContractViolation("ComputeMlpGradient: input length mismatch");
  }
  if (upstream.size() != net.output_size()) {
    throw ContractViolation("ComputeMlpGradient: upstream length mismatch");
  }
  DenseMatrix x(1, input.size());
  std::copy(input.begin(), input.end(), x.Row(0).begin());
  DenseMatrix up(1, upstream.size());
  std::copy(upstream.begin(), upstream.end(), up.Row(0).begin());

  MlpTape tape;
  net.Forward(x, tape);
  MlpGradient result;
  result.parameters.assign(net.num_parameters(), 0.0);
  DenseMatrix input_grad;
  net.Backward(tape, up, result.parameters, &input_grad);
  result.input.assign(input_grad.data().begin(), input_grad.data().end());
  return result;
}

}  // namespace goalbench::numerics
