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

#include "oracles.h"

#include <algorithm>
#include <cmath>

namespace goalbench::testing {

numerics::Mlp RandomMlp(const std::vector<std::size_t>& sizes,
                        numerics::Activation output, std::mt19937_64& rng) {
  numerics::Mlp net(sizes, output);
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  for (double& p : net.parameters()) p = dist(rng);
  return net;
}

numerics::DenseMatrix RandomMatrix(std::size_t rows, std::size_t cols,
                                   std::mt19937_64& rng, double lo, double hi) {
  numerics::DenseMatrix m(rows, cols);
  std::uniform_real_distribution<double> dist(lo, hi);
  for (double& v : m.data()) v = dist(rng);
  return m;
}

replay::Minibatch RandomMinibatch(std::size_t rows, std::size_t input_dim,
                                  std::size_t action_dim,
                                  std::mt19937_64& rng) {
  replay::Minibatch b;
  b.observations = RandomMatrix(rows, input_dim, rng);
  b.next_observations = RandomMatrix(rows, input_dim, rng);
  b.actions = RandomMatrix(rows, action_dim, rng, -0.95, 0.95);
  std::bernoulli_distribution coin(0.3);
  for (std::size_t i = 0; i < rows; ++i) {
    b.rewards.push_back(coin(rng) ? 0.0 : -1.0);
    b.terminated.push_back(coin(rng) ? 1.0 : 0.0);
  }
  return b;
}

std::vector<double> NaiveForward(const numerics::Mlp& net,
                                 std::span<const double> input) {
  std::vector<double> x(input.begin(), input.end());
  for (std::size_t l = 0; l < net.num_layers(); ++l) {
    const auto w = net.weights(l);
    const auto b = net.bias(l);
    std::vector<double> y(w.cols);
    for (std::size_t o = 0; o < w.cols; ++o) {
      double s = b[o];
      for (std::size_t k = 0; k < w.rows; ++k) s += x[k] * w(k, o);
      const bool last = l + 1 == net.num_layers();
      if (!last) {
        s = std::max(s, 0.0);
      } else if (net.output_activation() == numerics::Activation::kTanh) {
        s = std::tanh(s);
      } else if (net.output_activation() == numerics::Activation::kRelu) {
        s = std::max(s, 0.0);
      }
      y[o] = s;
    }
    x = std::move(y);
  }
  return x;
}

std::vector<double> CentralDifference(std::span<double> params,
                                      const std::function<double()>& f,
                                      double step) {
  std::vector<double> g(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double saved = params[i];
    params[i] = saved + step;
    const double up = f();
    params[i] = saved - step;
    const double down = f();
    params[i] = saved;
    g[i] = (up - down) / (2.0 * step);
  }
  return g;
}

double RelativeError(double a, double b, double floor) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

double MaxRelativeError(std::span<const double> analytic,
                        std::span<const double> numeric, double floor) {
  double worst = 0.0;
  for (std::size_t i = 0; i < analytic.size(); ++i) {
    worst = std::max(worst, RelativeError(analytic[i], numeric[i], floor));
  }
  return analytic.size() == numeric.size() ? worst : INFINITY;
}

void ReferenceAdam::Step(std::vector<double>& params,
                         const std::vector<double>& grads) {
  if (m.empty()) {
    m.assign(params.size(), 0.0);
    v.assign(params.size(), 0.0);
  }
  ++t;
  for (std::size_t i = 0; i < params.size(); ++i) {
    m[i] = beta1 * m[i] + (1 - beta1) * grads[i];
    v[i] = beta2 * v[i] + (1 - beta2) * grads[i] * grads[i];
    const double mhat = m[i] / (1 - std::pow(beta1, t));
    const double vhat = v[i] / (1 - std::pow(beta2, t));
    params[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

}  // namespace goalbench::testing
