// include/melfew/neural/net.hpp

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

#ifndef MELFEW_NEURAL_NET_HPP_
#define MELFEW_NEURAL_NET_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "melfew/common/matrix.hpp"
#include "melfew/common/rng.hpp"

namespace melfew {
namespace neural {

enum class Activation { kRectifier, kSigmoid, kIdentity };

const char *to_string(Activation a);
Activation parse_activation(const std::string &name);

struct LayerSpec {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  Activation activation = Activation::kIdentity;
};

// Per-layer gradient accumulator, same shapes as the net.
struct Gradients {
  std::vector<Matrix> weights;
  std::vector<Vector> biases;

  void add_scaled(const Gradients &other, double scale);
  void scale(double s);
  void set_zero();
};

// Fully-connected feed-forward net.  Weights are out_dim x in_dim row-major,
// applied as a = act(W x + b) layer by layer.
class DenseNet {
 public:
  DenseNet() = default;
  // Zero-initialized; throws Error("shape") if layer dims do not chain.
  explicit DenseNet(std::vector<LayerSpec> layers);
  // Fan-scaled uniform init, U(-L, L) with L = sqrt(6 / (fan_in + fan_out)).
  static DenseNet glorot_init(std::vector<LayerSpec> layers, Rng *rng);

  std::size_t num_layers() const { return layers_.size(); }
  const std::vector<LayerSpec> &layers() const { return layers_; }
  std::size_t input_dim() const;
  std::size_t output_dim() const;

  Matrix &weight(std::size_t l) { return weights_[l]; }
  const Matrix &weight(std::size_t l) const { return weights_[l]; }
  Vector &bias(std::size_t l) { return biases_[l]; }
  const Vector &bias(std::size_t l) const { return biases_[l]; }

  Gradients zero_gradients() const;
  bool weights_finite() const;
  std::size_t parameter_count() const;

 private:
  std::vector<LayerSpec> layers_;
  std::vector<Matrix> weights_;
  std::vector<Vector> biases_;
};

// Post-activation of every layer plus pre-activations, for backprop.
struct ForwardCache {
  Vector input;
  std::vector<Vector> pre;
  std::vector<Vector> post;
};

// Runs the net; cache may be null when only the output is needed.
// Throws Error("shape") when x does not match the input dim.
Vector forward(const DenseNet &net, const Vector &x, ForwardCache *cache = nullptr);

// Backprop from d(loss)/d(output) held in loss_grad.  Accumulates into
// *grads (callers zero it); the two-stream and joint objectives rely on the
// accumulation.  When input_grad is non-null the gradient with respect to
// the net input is added into it (chaining head into trunk).
void backward_accumulate(const DenseNet &net, const ForwardCache &cache,
                         const Vector &loss_grad, Gradients *grads,
                         Vector *input_grad = nullptr);

Gradients backward(const DenseNet &net, const ForwardCache &cache,
                   const Vector &loss_grad);

}  // namespace neural
}  // namespace melfew

#endif  // MELFEW_NEURAL_NET_HPP_
