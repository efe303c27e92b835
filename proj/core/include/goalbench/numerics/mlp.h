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

#ifndef GOALBENCH_NUMERICS_MLP_H_
#define GOALBENCH_NUMERICS_MLP_H_

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "goalbench/numerics/dense_matrix.h"

namespace goalbench::numerics {

enum class Activation { kIdentity, kRelu, kTanh };

// Activations recorded by a batched forward pass. activations[0] is the
// input, activations[l + 1] the post-activation output of layer l.
struct MlpTape {
  std::vector<DenseMatrix> activations;

  const DenseMatrix& output() const { return activations.back(); }
};

// Fully connected network with ReLU hidden layers and a configurable output
// activation.
//
// All parameters live in one contiguous buffer so optimizers, polyak
// averaging and checkpoints can treat a network as a flat vector. Layer l
// occupies a (fan_in x fan_out) row-major weight block followed by a fan_out
// bias block.
class Mlp {
 public:
  Mlp() = default;
  Mlp(std::vector<std::size_t> layer_sizes, Activation output_activation);

  // Uniform in +-1/sqrt(fan_in) for weights and biases.
  void InitializeUniform(std::mt19937_64& rng);

  const std::vector<std::size_t>& layer_sizes() const { return layer_sizes_; }
  std::size_t num_layers() const { return layer_sizes_.size() - 1; }
  std::size_t input_size() const { return layer_sizes_.front(); }
  std::size_t output_size() const { return layer_sizes_.back(); }
  std::size_t num_parameters() const { return params_.size(); }
  Activation output_activation() const { return output_activation_; }

  std::span<double> parameters() { return params_; }
  std::span<const double> parameters() const { return params_; }

  MatrixView<double> weights(std::size_t layer);
  MatrixView<const double> weights(std::size_t layer) const;
  std::span<double> bias(std::size_t layer);
  std::span<const double> bias(std::size_t layer) const;

  // Single-sample evaluation.
  std::vector<double> Forward(std::span<const double> input) const;

  // Batched evaluation, one sample per row of `input`.
  void Forward(const DenseMatrix& input, MlpTape& tape) const;

  // Reverse pass for the scalar sum_i upstream_i . output_i. Parameter
  // gradients are accumulated into `param_grads` (length num_parameters(),
  // or empty to skip them). `input_grad` is overwritten when non-null.
  void Backward(const MlpTape& tape, const DenseMatrix& upstream,
                std::span<double> param_grads, DenseMatrix* input_grad) const;

  friend bool operator==(const Mlp&, const Mlp&) = default;

 private:
  Activation ActivationFor(std::size_t layer) const;

  std::vector<std::size_t> layer_sizes_;
  std::vector<std::size_t> weight_offsets_;
  std::vector<std::size_t> bias_offsets_;
  Activation output_activation_ = Activation::kIdentity;
  std::vector<double> params_;
};

struct MlpGradient {
  std::vector<double> parameters;
  std::vector<double> input;
};

// Gradient of upstream . net(input) with respect to every parameter and the
// input, for a single sample.
MlpGradient ComputeMlpGradient(const Mlp& net, std::span<const double> input,
                               std::span<const double> upstream);

}  // namespace goalbench::numerics

#endif  // GOALBENCH_NUMERICS_MLP_H_
