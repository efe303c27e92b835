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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "goalbench/error.h"
#include "goalbench/numerics/adam.h"
#include "goalbench/numerics/dense_matrix.h"
#include "goalbench/numerics/mlp.h"
#include "goalbench/numerics/polyak.h"
#include "goalbench/numerics/squashed_gaussian.h"
#include "oracles.h"

namespace goalbench::numerics {
namespace {

using testing::CentralDifference;
using testing::MaxRelativeError;
using testing::NaiveForward;
using testing::RandomMatrix;
using testing::RandomMlp;

TEST(MlpForward, IdentityLayerPassesInputThrough) {
  Mlp net({2, 2}, Activation::kIdentity);
  auto w = net.weights(0);
  w(0, 0) = 1.0;
  w(1, 1) = 1.0;
  EXPECT_EQ(net.Forward(std::vector<double>{1.0, 2.0}),
            (std::vector<double>{1.0, 2.0}));
}

TEST(MlpForward, ZeroParametersGiveZeroOutput) {
  Mlp net({3, 5, 4, 2}, Activation::kIdentity);
  EXPECT_EQ(net.Forward(std::vector<double>{0.3, -7.0, 2.5}),
            (std::vector<double>{0.0, 0.0}));
}

TEST(MlpForward, MatchesStraightLineEvaluation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Mlp net = RandomMlp({3, 4, 2}, Activation::kIdentity, rng);
    const DenseMatrix x = RandomMatrix(1, 3, rng);
    const auto got = net.Forward(x.Row(0));
    const auto want = NaiveForward(net, x.Row(0));
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_NEAR(got[i], want[i], 1e-14);
    }
  }
}

TEST(MlpForward, BatchedPathAgreesWithNaiveOnTiledShapes) {
  // Widths straddle the register-tile sizes so edge paths are exercised.
  std::mt19937_64 rng(12);
  for (std::size_t width : {1u, 3u, 8u, 15u, 16u, 17u, 25u, 33u}) {
    for (std::size_t rows : {1u, 3u, 4u, 9u, 17u}) {
      const Mlp net = RandomMlp({7, width, width + 2, 5}, Activation::kTanh, rng);
      const DenseMatrix x = RandomMatrix(rows, 7, rng);
      MlpTape tape;
      net.Forward(x, tape);
      for (std::size_t r = 0; r < rows; ++r) {
        const auto want = NaiveForward(net, x.Row(r));
        for (std::size_t o = 0; o < want.size(); ++o) {
          ASSERT_NEAR(tape.output()(r, o), want[o], 1e-12)
              << "width " << width << " rows " << rows;
        }
      }
    }
  }
}

TEST(MlpForward, RejectsWrongInputLength) {
  Mlp net({3, 2}, Activation::kIdentity);
  EXPECT_THROW(net.Forward(std::vector<double>{1.0, 2.0}), ContractViolation);
  MlpTape tape;
  EXPECT_THROW(net.Forward(DenseMatrix(2, 4), tape), ContractViolation);
}

TEST(MlpForward, IsPure) {
  std::mt19937_64 rng(13);
  const Mlp net = RandomMlp({6, 16, 16, 3}, Activation::kTanh, rng);
  const DenseMatrix x = RandomMatrix(1, 6, rng);
  const auto a = net.Forward(x.Row(0));
  const auto b = net.Forward(x.Row(0));
  EXPECT_EQ(a, b);
}

TEST(MlpGradient, ZeroUpstreamGivesZeroGradients) {
  std::mt19937_64 rng(14);
  const Mlp net = RandomMlp({4, 8, 8, 2}, Activation::kIdentity, rng);
  const auto g = ComputeMlpGradient(net, std::vector<double>{0.1, 0.2, 0.3, 0.4},
                                    std::vector<double>{0.0, 0.0});
  for (double v : g.parameters) EXPECT_EQ(v, 0.0);
  for (double v : g.input) EXPECT_EQ(v, 0.0);
}

TEST(MlpGradient, LinearScalarNetIsAnalytic) {
  Mlp net({1, 1}, Activation::kIdentity);
  net.weights(0)(0, 0) = 0.7;
  net.bias(0)[0] = -0.2;
  const auto g = ComputeMlpGradient(net, std::vector<double>{3.0},
                                    std::vector<double>{1.0});
  // parameter order: weight then bias
  EXPECT_DOUBLE_EQ(g.parameters[0], 3.0);
  EXPECT_DOUBLE_EQ(g.parameters[1], 1.0);
  EXPECT_DOUBLE_EQ(g.input[0], 0.7);
}

TEST(MlpGradient, MatchesFiniteDifferences) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    Mlp net = RandomMlp({4, 8, 8, 1}, Activation::kIdentity, rng);
    const DenseMatrix x = RandomMatrix(1, 4, rng);
    const std::vector<double> up = {1.0};
    const auto g = ComputeMlpGradient(net, x.Row(0), up);
    const auto numeric = CentralDifference(
        net.parameters(), [&] { return net.Forward(x.Row(0))[0]; });
    EXPECT_LE(MaxRelativeError(g.parameters, numeric), 1e-5);
  }
}

TEST(MlpGradient, BatchedGradientSumsPerRowGradients) {
  std::mt19937_64 rng(16);
  const Mlp net = RandomMlp({5, 17, 9, 3}, Activation::kTanh, rng);
  const DenseMatrix x = RandomMatrix(6, 5, rng);
  const DenseMatrix up = RandomMatrix(6, 3, rng);
  MlpTape tape;
  net.Forward(x, tape);
  std::vector<double> batched(net.num_parameters(), 0.0);
  DenseMatrix input_grad;
  net.Backward(tape, up, batched, &input_grad);
  std::vector<double> summed(net.num_parameters(), 0.0);
  for (std::size_t r = 0; r < 6; ++r) {
    const auto g = ComputeMlpGradient(net, x.Row(r), up.Row(r));
    for (std::size_t i = 0; i < summed.size(); ++i) summed[i] += g.parameters[i];
    for (std::size_t c = 0; c < 5; ++c) {
      EXPECT_NEAR(input_grad(r, c), g.input[c], 1e-12);
    }
  }
  for (std::size_t i = 0; i < summed.size(); ++i) {
    EXPECT_NEAR(batched[i], summed[i], 1e-11);
  }
}

TEST(MlpGradient, RejectsWrongUpstreamLength) {
  Mlp net({2, 3}, Activation::kIdentity);
  EXPECT_THROW(ComputeMlpGradient(net, std::vector<double>{1.0, 2.0},
                                  std::vector<double>{1.0}),
               ContractViolation);
}

TEST(Initialization, WithinFanInBound) {
  Mlp net({16, 64, 4}, Activation::kIdentity);
  std::mt19937_64 rng(3);
  net.InitializeUniform(rng);
  for (std::size_t l = 0; l < net.num_layers(); ++l) {
    const double bound = 1.0 / std::sqrt(double(net.layer_sizes()[l]));
    for (double w : net.weights(l).data) EXPECT_LE(std::abs(w), bound);
    for (double b : net.bias(l)) EXPECT_LE(std::abs(b), bound);
  }
}

TEST(Adam, ZeroGradientLeavesParametersUnchanged) {
  std::vector<double> p = {0.5, -1.0, 2.0};
  const auto before = p;
  AdamState s(3, AdamConfig{});
  AdamStep(p, std::vector<double>(3, 0.0), s);
  EXPECT_EQ(p, before);
  EXPECT_EQ(s.step_count, 1u);
}

TEST(Adam, FirstStepMovesByLearningRate) {
  std::vector<double> p = {0.0};
  AdamState s(1, AdamConfig{});
  AdamStep(p, std::vector<double>{2.0}, s);
  // -lr * g / (|g| + eps)
  EXPECT_NEAR(p[0], -0.001 * 2.0 / (2.0 + 1e-8), 1e-15);
}

TEST(Adam, MatchesReferenceImplementation) {
  std::mt19937_64 rng(4);
  std::vector<double> p = {0.3, -0.2, 1.5, 0.0};
  std::vector<double> q = p;
  AdamState s(p.size(), AdamConfig{});
  testing::ReferenceAdam ref;
  const std::vector<double> g = {0.5, -2.0, 1e-3, 4.0};
  for (int step = 0; step < 2; ++step) {
    AdamStep(p, g, s);
    ref.Step(q, g);
  }
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], q[i], 1e-15);
  std::normal_distribution<double> n(0.0, 3.0);
  for (int step = 0; step < 50; ++step) {
    std::vector<double> gr(p.size());
    for (double& v : gr) v = n(rng);
    AdamStep(p, gr, s);
    ref.Step(q, gr);
  }
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], q[i], 1e-13);
}

TEST(Adam, RejectsNonFiniteGradientWithoutMutation) {
  std::vector<double> p = {1.0, 2.0};
  AdamState s(2, AdamConfig{});
  const auto before_state = s;
  EXPECT_THROW(AdamStep(p, std::vector<double>{0.1, NAN}, s), NonFiniteError);
  EXPECT_EQ(p, (std::vector<double>{1.0, 2.0}));
  EXPECT_EQ(s, before_state);
}

TEST(Adam, RejectsShapeMismatch) {
  std::vector<double> p = {1.0, 2.0};
  AdamState s(2, AdamConfig{});
  EXPECT_THROW(AdamStep(p, std::vector<double>{0.1}, s), ContractViolation);
}

TEST(Adam, FiniteGradientsGiveFiniteParameters) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> huge(-1e150, 1e150);
  std::vector<double> p(8, 0.0);
  AdamState s(8, AdamConfig{});
  for (int step = 0; step < 100; ++step) {
    std::vector<double> g(8);
    for (double& v : g) v = huge(rng);
    AdamStep(p, g, s);
    for (double v : p) ASSERT_TRUE(std::isfinite(v));
  }
}

TEST(Polyak, TauOneCopiesOnline) {
  std::vector<double> target = {1.0, 2.0};
  PolyakUpdate(target, std::vector<double>{-3.0, 0.5}, 1.0);
  EXPECT_EQ(target, (std::vector<double>{-3.0, 0.5}));
}

TEST(Polyak, TauZeroKeepsTarget) {
  std::vector<double> target = {1.0, 2.0};
  PolyakUpdate(target, std::vector<double>{-3.0, 0.5}, 0.0);
  EXPECT_EQ(target, (std::vector<double>{1.0, 2.0}));
}

TEST(Polyak, MovesTowardOnlineByTau) {
  std::vector<double> target = {0.0};
  PolyakUpdate(target, std::vector<double>{1.0}, 0.05);
  EXPECT_DOUBLE_EQ(target[0], 0.05);
}

TEST(Polyak, GapShrinksGeometrically) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> target(32), online(32);
  for (double& v : target) v = u(rng);
  for (double& v : online) v = u(rng);
  auto gap = [&] {
    double g = 0.0;
    for (std::size_t i = 0; i < 32; ++i) {
      g = std::max(g, std::abs(target[i] - online[i]));
    }
    return g;
  };
  const double g0 = gap();
  for (int k = 1; k <= 100; ++k) {
    PolyakUpdate(target, online, 0.05);
    EXPECT_NEAR(gap(), g0 * std::pow(0.95, k), 1e-12);
  }
}

TEST(Polyak, RejectsBadTauAndShapes) {
  std::vector<double> t = {0.0};
  EXPECT_THROW(PolyakUpdate(t, std::vector<double>{1.0}, 1.5), ContractViolation);
  EXPECT_THROW(PolyakUpdate(t, std::vector<double>{1.0}, -0.1), ContractViolation);
  EXPECT_THROW(PolyakUpdate(t, std::vector<double>{1.0, 2.0}, 0.5),
               ContractViolation);
}

TEST(SquashedGaussian, ModeHasAnalyticLogProb) {
  const std::vector<double> mean = {0.0, 0.0};
  const std::vector<double> log_std = {-0.5, 0.3};
  const auto out = SampleSquashedGaussian(mean, log_std, std::vector<double>{0.0, 0.0});
  EXPECT_EQ(out.sampled_action, (std::vector<double>{0.0, 0.0}));
  const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  // log(1 - 0 + eps) per dimension is tiny but present.
  const double want = (0.5 - half_log_2pi) + (-0.3 - half_log_2pi) -
                      2.0 * std::log1p(kSquashEpsilon);
  EXPECT_NEAR(out.log_prob, want, 1e-15);
}

TEST(SquashedGaussian, ActionsStayInsideOpenInterval) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const std::vector<double> mean = {u(rng)};
    const std::vector<double> log_std = {u(rng) - 1.0};
    const auto out = SampleSquashedGaussian(mean, log_std, std::vector<double>{n(rng)});
    EXPECT_GT(out.sampled_action[0], -1.0);
    EXPECT_LT(out.sampled_action[0], 1.0);
    EXPECT_TRUE(std::isfinite(out.log_prob));
  }
}

TEST(SquashedGaussian, IsDeterministic) {
  const std::vector<double> mean = {0.2, -0.4};
  const std::vector<double> log_std = {-1.0, 0.5};
  const std::vector<double> noise = {0.7, -1.3};
  const auto a = SampleSquashedGaussian(mean, log_std, noise);
  const auto b = SampleSquashedGaussian(mean, log_std, noise);
  EXPECT_EQ(a.sampled_action, b.sampled_action);
  EXPECT_EQ(a.log_prob, b.log_prob);
}

TEST(SquashedGaussian, ClampsLogStd) {
  const auto out = SampleSquashedGaussian(std::vector<double>{0.0},
                                          std::vector<double>{5.0},
                                          std::vector<double>{0.0});
  EXPECT_EQ(out.log_std[0], kLogStdMax);
  const auto low = SampleSquashedGaussian(std::vector<double>{0.0},
                                          std::vector<double>{-50.0},
                                          std::vector<double>{0.0});
  EXPECT_EQ(low.log_std[0], kLogStdMin);
}

// Density over actions integrates to one: substitute a = tanh(u) and
// integrate exp(log_prob(u)) da over (-1, 1) with the midpoint rule in u.
TEST(SquashedGaussian, DensityIntegratesToOne) {
  for (const auto& [mu, ls] : {std::pair{0.0, 0.0}, std::pair{0.7, -0.5},
                               std::pair{-1.2, 0.4}}) {
    const double sigma = std::exp(ls);
    const double lo = mu - 12.0 * sigma, hi = mu + 12.0 * sigma;
    const int n = 200000;
    const double du = (hi - lo) / n;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      const double u = lo + (i + 0.5) * du;
      const double noise = (u - mu) / sigma;
      const auto out = SampleSquashedGaussian(std::vector<double>{mu},
                                              std::vector<double>{ls},
                                              std::vector<double>{noise});
      const double da_du = 1.0 - std::tanh(u) * std::tanh(u);
      total += std::exp(out.log_prob) * da_du * du;
    }
    EXPECT_NEAR(total, 1.0, 1e-3) << "mean " << mu << " log_std " << ls;
  }
}

TEST(SquashedGaussian, BackwardMatchesFiniteDifferences) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> mean = {n(rng) * 0.5, n(rng) * 0.5, n(rng) * 0.5};
    std::vector<double> log_std = {n(rng) * 0.3, n(rng) * 0.3, n(rng) * 0.3};
    const std::vector<double> noise = {n(rng), n(rng), n(rng)};
    const std::vector<double> action_grad = {n(rng), n(rng), n(rng)};
    const double lp_grad = n(rng);
    auto objective = [&] {
      const auto out = SampleSquashedGaussian(mean, log_std, noise);
      double s = lp_grad * out.log_prob;
      for (int i = 0; i < 3; ++i) s += action_grad[i] * out.sampled_action[i];
      return s;
    };
    std::vector<double> mg(3), lg(3);
    SquashedGaussianBackward(mean, log_std, noise, action_grad, lp_grad, mg, lg);
    EXPECT_LE(MaxRelativeError(mg, CentralDifference(mean, objective)), 1e-5);
    EXPECT_LE(MaxRelativeError(lg, CentralDifference(log_std, objective)), 1e-5);
  }
}

TEST(DenseMatrix, ConcatColumns) {
  const auto a = DenseMatrix::FromRows({{1, 2}, {3, 4}});
  const auto b = DenseMatrix::FromRows({{5}, {6}});
  DenseMatrix out;
  ConcatColumns(a, b, out);
  EXPECT_EQ(out, DenseMatrix::FromRows({{1, 2, 5}, {3, 4, 6}}));
  EXPECT_THROW(ConcatColumns(a, DenseMatrix(3, 1), out), ContractViolation);
}

}  // namespace
}  // namespace goalbench::numerics
