// Copyright 2026  melfew authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "melfew/common/error.hpp"
#include "melfew/common/rng.hpp"
#include "melfew/data/types.hpp"
#include "melfew/neural/adam.hpp"
#include "melfew/neural/checkpoint.hpp"
#include "melfew/neural/loss.hpp"
#include "melfew/neural/net.hpp"
#include "test_util.hpp"

using namespace melfew;
using namespace melfew::neural;
using melfew::testutil::flatten_gradients;
using melfew::testutil::max_gradient_rel_err;
using melfew::testutil::net_params;

namespace {

DenseNet random_net(std::vector<LayerSpec> layers, std::uint64_t seed) {
  Rng rng(seed);
  return DenseNet::glorot_init(std::move(layers), &rng);
}

}  // namespace

TEST_CASE("forward matches hand-computed sigmoid unit") {
  // One sigmoid unit, w = 1, b = 0: x = 0.2 gives 1/(1+exp(-0.2)).
  DenseNet net({{1, 1, Activation::kSigmoid}});
  net.weight(0)(0, 0) = 1.0;
  Vector out = forward(net, {0.2});
  REQUIRE(out.size() == 1);
  CHECK(out[0] == doctest::Approx(0.549834).epsilon(1e-6));
}

TEST_CASE("forward with zero weights gives 0.5 through sigmoid") {
  DenseNet net({{3, 4, Activation::kRectifier}, {4, 2, Activation::kSigmoid}});
  Vector out = forward(net, {1.0, -2.0, 3.0});
  REQUIRE(out.size() == 2);
  CHECK(out[0] == 0.5);
  CHECK(out[1] == 0.5);
}

TEST_CASE("forward applies identity layers as a plain affine map") {
  DenseNet net({{2, 2, Activation::kIdentity}});
  net.weight(0)(0, 0) = 2.0;
  net.weight(0)(1, 1) = -1.0;
  net.bias(0) = {1.0, 0.0};
  Vector out = forward(net, {3.0, 4.0});
  CHECK(out[0] == 7.0);
  CHECK(out[1] == -4.0);
}

TEST_CASE("forward rejects wrong input dim and bad layer chains") {
  DenseNet net({{2, 3, Activation::kRectifier}});
  try {
    forward(net, {1.0});
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "shape");
  }
  CHECK_THROWS_AS((DenseNet({{2, 3, Activation::kRectifier},
                             {4, 1, Activation::kSigmoid}})),
                  Error);
}

TEST_CASE("rectifier clamps below zero, sigmoid stays in (0,1)") {
  DenseNet net({{1, 2, Activation::kRectifier}});
  net.weight(0)(0, 0) = 1.0;
  net.weight(0)(1, 0) = -1.0;
  Vector out = forward(net, {2.0});
  CHECK(out[0] == 2.0);
  CHECK(out[1] == 0.0);

  DenseNet sig({{1, 1, Activation::kSigmoid}});
  sig.weight(0)(0, 0) = 2.0;
  Vector hi = forward(sig, {10.0});
  CHECK(hi[0] > 0.99);
  CHECK(hi[0] < 1.0);
}

TEST_CASE("backward reproduces the scalar chain-rule example") {
  // L = 0.5 (w x - y)^2 with x = 2, w = 1, y = 0: dL/dw = (wx - y) x = 4.
  DenseNet net({{1, 1, Activation::kIdentity}});
  net.weight(0)(0, 0) = 1.0;
  ForwardCache cache;
  Vector out = forward(net, {2.0}, &cache);
  Vector loss_grad{out[0] - 0.0};  // d(0.5 r^2)/d(out) = r
  Gradients grads = net.zero_gradients();
  backward_accumulate(net, cache, loss_grad, &grads);
  CHECK(grads.weights[0](0, 0) == 4.0);
  CHECK(grads.biases[0][0] == 2.0);
}

TEST_CASE("backward accumulates across calls and reports input gradients") {
  DenseNet net = random_net({{3, 4, Activation::kSigmoid},
                             {4, 2, Activation::kSigmoid}},
                            11);
  ForwardCache cache;
  Vector x{0.3, -0.6, 0.9};
  forward(net, x, &cache);
  Vector lg{0.25, -0.5};
  Gradients once = net.zero_gradients();
  backward_accumulate(net, cache, lg, &once);
  Gradients twice = net.zero_gradients();
  backward_accumulate(net, cache, lg, &twice);
  backward_accumulate(net, cache, lg, &twice);
  for (std::size_t l = 0; l < net.num_layers(); ++l)
    for (std::size_t i = 0; i < once.weights[l].size(); ++i)
      CHECK(twice.weights[l].data[i] ==
            doctest::Approx(2.0 * once.weights[l].data[i]).epsilon(1e-12));

  // Input gradient against central differences.
  Vector input_grad(3, 0.0);
  Gradients g = net.zero_gradients();
  backward_accumulate(net, cache, lg, &g, &input_grad);
  for (std::size_t d = 0; d < x.size(); ++d) {
    Vector xp = x, xm = x;
    xp[d] += 1e-6;
    xm[d] -= 1e-6;
    auto weighted = [&](const Vector &v) {
      Vector o = forward(net, v);
      return lg[0] * o[0] + lg[1] * o[1];
    };
    double fd = (weighted(xp) - weighted(xm)) / 2e-6;
    CHECK(testutil::gradient_rel_err(input_grad[d], fd) < 1e-4);
  }
}

TEST_CASE("gradients agree with finite differences under cross-entropy") {
  Rng seeds(500);
  for (int trial = 0; trial < 5; ++trial) {
    DenseNet net = random_net({{4, 6, Activation::kRectifier},
                               {6, 5, Activation::kSigmoid},
                               {5, 3, Activation::kSigmoid}},
                              seeds.raw());
    Rng rng(seeds.raw());
    Vector x(4);
    for (double &v : x) v = rng.normal();
    Vector target = data::one_hot(static_cast<data::Emotion>(trial % 3));

    ForwardCache cache;
    Vector pred = forward(net, x, &cache);
    LossResult lr = cross_entropy(pred, target);
    Gradients grads = net.zero_gradients();
    backward_accumulate(net, cache, lr.grad, &grads);

    auto objective = [&]() {
      return cross_entropy(forward(net, x), target).loss;
    };
    double worst = max_gradient_rel_err(net_params(&net),
                                        flatten_gradients(grads), objective);
    CHECK(worst < 1e-4);
  }
}

TEST_CASE("cross_entropy oracles") {
  Vector uniform{1.0 / 3, 1.0 / 3, 1.0 / 3};
  CHECK(cross_entropy(uniform, data::one_hot(data::Emotion::kAnger)).loss ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));
  Vector conf{0.8, 0.1, 0.1};
  CHECK(cross_entropy(conf, data::one_hot(data::Emotion::kAnger)).loss ==
        doctest::Approx(-std::log(0.8)).epsilon(1e-12));
  // Scores are clamped, so a one-hot prediction is finite and tiny.
  Vector hot{1.0, 0.0, 0.0};
  double l = cross_entropy(hot, data::one_hot(data::Emotion::kAnger)).loss;
  CHECK(std::isfinite(l));
  CHECK(l < 1e-9);
  CHECK_THROWS_AS((cross_entropy({0.5, 0.5}, {1.0, 0.0, 0.0})), Error);
}

TEST_CASE("binary_cross_entropy oracle and gradient") {
  double grad = 0.0;
  CHECK(binary_cross_entropy(0.5, 1.0, &grad) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(grad == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK(binary_cross_entropy(0.5, 0.0, &grad) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(grad == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::isfinite(binary_cross_entropy(0.0, 1.0, &grad)));
}

TEST_CASE("glorot init respects fan bounds and is seed-stable") {
  Rng a(9), b(9);
  DenseNet n1 = DenseNet::glorot_init({{8, 4, Activation::kRectifier}}, &a);
  DenseNet n2 = DenseNet::glorot_init({{8, 4, Activation::kRectifier}}, &b);
  CHECK(testutil::nets_equal(n1, n2));
  const double limit = std::sqrt(6.0 / (8 + 4));
  bool nonzero = false;
  for (double w : n1.weight(0).data) {
    CHECK(std::fabs(w) <= limit);
    if (w != 0.0) nonzero = true;
  }
  CHECK(nonzero);
  for (double bb : n1.bias(0)) CHECK(bb == 0.0);
}

TEST_CASE("adam leaves weights alone on zero gradients") {
  DenseNet net = random_net({{2, 3, Activation::kSigmoid}}, 21);
  DenseNet before = net;
  AdamState adam(net, {});
  adam.step(&net, net.zero_gradients());
  CHECK(testutil::nets_equal(net, before));
}

TEST_CASE("first adam step moves by about -lr * sign(gradient)") {
  DenseNet net({{1, 1, Activation::kIdentity}});
  net.weight(0)(0, 0) = 2.0;
  AdamConfig cfg;
  cfg.lr = 0.01;
  AdamState adam(net, cfg);
  Gradients g = net.zero_gradients();
  g.weights[0](0, 0) = 0.73;  // positive gradient, any magnitude
  adam.step(&net, g);
  CHECK(net.weight(0)(0, 0) ==
        doctest::Approx(2.0 - cfg.lr).epsilon(1e-4));
}

TEST_CASE("adam drives a quadratic to its minimum") {
  // Minimize (w - 3)^2 from w = 0 with lr = 0.1: 200 steps get close.
  DenseNet net({{1, 1, Activation::kIdentity}});
  AdamConfig cfg;
  cfg.lr = 0.1;
  AdamState adam(net, cfg);
  for (int i = 0; i < 200; ++i) {
    Gradients g = net.zero_gradients();
    g.weights[0](0, 0) = 2.0 * (net.weight(0)(0, 0) - 3.0);
    adam.step(&net, g);
  }
  CHECK(std::fabs(net.weight(0)(0, 0) - 3.0) < 0.1);
  CHECK(adam.step_count() == 200);
}

TEST_CASE("adam rejects non-finite gradients before touching weights") {
  DenseNet net = random_net({{2, 2, Activation::kSigmoid}}, 3);
  DenseNet before = net;
  AdamState adam(net, {});
  Gradients g = net.zero_gradients();
  g.weights[0](0, 0) = std::nan("");
  try {
    adam.step(&net, g);
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "training");
  }
  CHECK(testutil::nets_equal(net, before));
}

TEST_CASE("checkpoints round-trip bit-exactly") {
  DenseNet net = random_net({{5, 7, Activation::kRectifier},
                             {7, 3, Activation::kSigmoid}},
                            404);
  std::stringstream ss;
  save_net(net, ss);
  DenseNet back = load_net(ss);
  REQUIRE(back.num_layers() == net.num_layers());
  CHECK(testutil::nets_equal(net, back));
  for (std::size_t l = 0; l < net.num_layers(); ++l)
    CHECK(back.layers()[l].activation == net.layers()[l].activation);
}

TEST_CASE("checkpoint loader rejects corrupt input") {
  std::stringstream ss("not a checkpoint\n");
  try {
    load_net(ss);
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "parse");
  }
}

TEST_CASE("hexfloat helpers round-trip doubles") {
  for (double v : {0.0, -1.5, 3.141592653589793, 1e-300, -2.2250738585072014e-308}) {
    CHECK(parse_hex_double(format_hex_double(v), "t") == v);
  }
  CHECK_THROWS_AS(parse_hex_double("zzz", "t"), Error);
}
