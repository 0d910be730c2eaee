// src/neural/adam.cpp

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

#include "melfew/neural/adam.hpp"

#include <cmath>

#include "melfew/common/error.hpp"
#include "melfew/kernels/kernels.hpp"

namespace melfew {
namespace neural {

AdamState::AdamState(const DenseNet &net, const AdamConfig &cfg) : cfg_(cfg) {
  for (std::size_t l = 0; l < net.num_layers(); ++l) {
    const Matrix &w = net.weight(l);
    m_w_.emplace_back(w.rows, w.cols, 0.0);
    v_w_.emplace_back(w.rows, w.cols, 0.0);
    m_b_.emplace_back(w.rows, 0.0);
    v_b_.emplace_back(w.rows, 0.0);
  }
}

void AdamState::step(DenseNet *net, const Gradients &grads) {
  if (grads.weights.size() != net->num_layers())
    throw Error("shape", "adam_step: gradients do not match net");
  for (std::size_t l = 0; l < net->num_layers(); ++l) {
    for (double g : grads.weights[l].data)
      if (!std::isfinite(g))
        throw Error("training",
                    "non-finite weight gradient in layer " + std::to_string(l));
    for (double g : grads.biases[l])
      if (!std::isfinite(g))
        throw Error("training",
                    "non-finite bias gradient in layer " + std::to_string(l));
  }
  ++steps_;
  double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(steps_));
  double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(steps_));
  for (std::size_t l = 0; l < net->num_layers(); ++l) {
    Matrix &w = net->weight(l);
    kernels::adam_update(w.data.data(), m_w_[l].data.data(),
                         v_w_[l].data.data(), grads.weights[l].data.data(),
                         w.size(), cfg_.lr, cfg_.beta1, cfg_.beta2, cfg_.eps,
                         bc1, bc2);
    Vector &b = net->bias(l);
    kernels::adam_update(b.data(), m_b_[l].data(), v_b_[l].data(),
                         grads.biases[l].data(), b.size(), cfg_.lr, cfg_.beta1,
                         cfg_.beta2, cfg_.eps, bc1, bc2);
  }
}

}  // namespace neural
}  // namespace melfew
