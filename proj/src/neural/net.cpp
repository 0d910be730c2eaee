// src/neural/net.cpp

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

#include "melfew/neural/net.hpp"

#include <algorithm>
#include <cmath>

#include "melfew/common/error.hpp"
#include "melfew/kernels/kernels.hpp"

namespace melfew {
namespace neural {

const char *to_string(Activation a) {
  switch (a) {
    case Activation::kRectifier:
      return "rectifier";
    case Activation::kSigmoid:
      return "sigmoid";
    case Activation::kIdentity:
      return "identity";
  }
  return "?";
}

Activation parse_activation(const std::string &name) {
  if (name == "rectifier") return Activation::kRectifier;
  if (name == "sigmoid") return Activation::kSigmoid;
  if (name == "identity") return Activation::kIdentity;
  throw Error("parse", "unknown activation '" + name + "'");
}

namespace {

// Numerically stable logistic; output is in (0,1) for all non-overflowing z.
inline double sigmoid(double z) {
  if (z >= 0.0) {
    double e = std::exp(-z);
    return 1.0 / (1.0 + e);
  }
  double e = std::exp(z);
  return e / (1.0 + e);
}

inline double activate(Activation a, double z) {
  switch (a) {
    case Activation::kRectifier:
      return z > 0.0 ? z : 0.0;
    case Activation::kSigmoid:
      return sigmoid(z);
    case Activation::kIdentity:
      return z;
  }
  return z;
}

// Derivative at pre-activation z with post-activation y already computed.
inline double activate_grad(Activation a, double z, double y) {
  switch (a) {
    case Activation::kRectifier:
      return z > 0.0 ? 1.0 : 0.0;
    case Activation::kSigmoid:
      return y * (1.0 - y);
    case Activation::kIdentity:
      return 1.0;
  }
  return 1.0;
}

}  // namespace

void Gradients::add_scaled(const Gradients &other, double scale) {
  for (std::size_t l = 0; l < weights.size(); ++l) {
    kernels::axpy(scale, other.weights[l].data.data(), weights[l].data.data(),
                  weights[l].size());
    kernels::axpy(scale, other.biases[l].data(), biases[l].data(),
                  biases[l].size());
  }
}

void Gradients::scale(double s) {
  for (std::size_t l = 0; l < weights.size(); ++l) {
    for (double &w : weights[l].data) w *= s;
    for (double &b : biases[l]) b *= s;
  }
}

void Gradients::set_zero() {
  for (std::size_t l = 0; l < weights.size(); ++l) {
    std::fill(weights[l].data.begin(), weights[l].data.end(), 0.0);
    std::fill(biases[l].begin(), biases[l].end(), 0.0);
  }
}

DenseNet::DenseNet(std::vector<LayerSpec> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw Error("shape", "net needs at least one layer");
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    if (layers_[l].in_dim == 0 || layers_[l].out_dim == 0)
      throw Error("shape", "layer " + std::to_string(l) + " has a zero dim");
    if (l > 0 && layers_[l].in_dim != layers_[l - 1].out_dim)
      throw Error("shape", "layer " + std::to_string(l) +
                               " input dim does not chain with previous layer");
    weights_.emplace_back(layers_[l].out_dim, layers_[l].in_dim, 0.0);
    biases_.emplace_back(layers_[l].out_dim, 0.0);
  }
}

DenseNet DenseNet::glorot_init(std::vector<LayerSpec> layers, Rng *rng) {
  DenseNet net(std::move(layers));
  for (std::size_t l = 0; l < net.num_layers(); ++l) {
    Matrix &w = net.weight(l);
    double limit = std::sqrt(6.0 / static_cast<double>(w.rows + w.cols));
    for (double &x : w.data) x = rng->uniform(-limit, limit);
    // Biases start at zero.
  }
  return net;
}

std::size_t DenseNet::input_dim() const {
  return layers_.empty() ? 0 : layers_.front().in_dim;
}

std::size_t DenseNet::output_dim() const {
  return layers_.empty() ? 0 : layers_.back().out_dim;
}

Gradients DenseNet::zero_gradients() const {
  Gradients g;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    g.weights.emplace_back(layers_[l].out_dim, layers_[l].in_dim, 0.0);
    g.biases.emplace_back(layers_[l].out_dim, 0.0);
  }
  return g;
}

bool DenseNet::weights_finite() const {
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    for (double w : weights_[l].data)
      if (!std::isfinite(w)) return false;
    for (double b : biases_[l])
      if (!std::isfinite(b)) return false;
  }
  return true;
}

std::size_t DenseNet::parameter_count() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < layers_.size(); ++l)
    n += weights_[l].size() + biases_[l].size();
  return n;
}

Vector forward(const DenseNet &net, const Vector &x, ForwardCache *cache) {
  if (x.size() != net.input_dim())
    throw Error("shape", "forward: input has " + std::to_string(x.size()) +
                             " dims, net expects " +
                             std::to_string(net.input_dim()));
  if (cache) {
    cache->input = x;
    cache->pre.assign(net.num_layers(), {});
    cache->post.assign(net.num_layers(), {});
  }
  Vector cur = x;
  for (std::size_t l = 0; l < net.num_layers(); ++l) {
    const Matrix &w = net.weight(l);
    Vector z(w.rows);
    kernels::matvec(w.data.data(), w.rows, w.cols, cur.data(),
                    net.bias(l).data(), z.data());
    Vector a(w.rows);
    for (std::size_t i = 0; i < w.rows; ++i)
      a[i] = activate(net.layers()[l].activation, z[i]);
    if (cache) {
      cache->pre[l] = std::move(z);
      cache->post[l] = a;
    }
    cur = std::move(a);
  }
  return cur;
}

void backward_accumulate(const DenseNet &net, const ForwardCache &cache,
                         const Vector &loss_grad, Gradients *grads,
                         Vector *input_grad) {
  const std::size_t L = net.num_layers();
  if (loss_grad.size() != net.output_dim())
    throw Error("shape", "backward: loss gradient has wrong dim");
  if (cache.pre.size() != L || cache.post.size() != L)
    throw Error("shape", "backward: cache does not match net");
  Vector delta = loss_grad;
  for (std::size_t li = L; li-- > 0;) {
    const Matrix &w = net.weight(li);
    // dz = delta * act'(pre)
    Vector dz(w.rows);
    for (std::size_t i = 0; i < w.rows; ++i)
      dz[i] = delta[i] * activate_grad(net.layers()[li].activation,
                                       cache.pre[li][i], cache.post[li][i]);
    const Vector &below = li == 0 ? cache.input : cache.post[li - 1];
    kernels::rank1_update(1.0, dz.data(), w.rows, below.data(), w.cols,
                          grads->weights[li].data.data());
    kernels::axpy(1.0, dz.data(), grads->biases[li].data(), w.rows);
    if (li > 0 || input_grad) {
      Vector prev(w.cols);
      kernels::matvec_t(w.data.data(), w.rows, w.cols, dz.data(), prev.data());
      if (li == 0) {
        kernels::axpy(1.0, prev.data(), input_grad->data(), w.cols);
        break;
      }
      delta = std::move(prev);
    }
  }
}

Gradients backward(const DenseNet &net, const ForwardCache &cache,
                   const Vector &loss_grad) {
  Gradients g = net.zero_gradients();
  backward_accumulate(net, cache, loss_grad, &g);
  return g;
}

}  // namespace neural
}  // namespace melfew
