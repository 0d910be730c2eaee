// src/neural/loss.cpp

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

#include "melfew/neural/loss.hpp"

#include <algorithm>
#include <cmath>

#include "melfew/common/error.hpp"

namespace melfew {
namespace neural {

LossResult cross_entropy(const Vector &pred, const Vector &target) {
  if (pred.size() != target.size())
    throw Error("shape", "cross_entropy: prediction and target dims differ");
  if (pred.empty()) throw Error("shape", "cross_entropy: empty prediction");
  // The scores come from independent sigmoid units, so they are renormalized
  // to a distribution before the log. Without the 1/S term nothing pushes
  // wrong-class scores down and every output saturates toward 1.
  LossResult r;
  r.grad.assign(pred.size(), 0.0);
  Vector p(pred.size());
  double sum = 0.0, target_mass = 0.0;
  for (std::size_t k = 0; k < pred.size(); ++k) {
    p[k] = std::clamp(pred[k], kProbClamp, 1.0 - kProbClamp);
    sum += p[k];
    target_mass += target[k];
  }
  const double log_sum = std::log(sum);
  for (std::size_t k = 0; k < pred.size(); ++k) {
    r.loss -= target[k] * (std::log(p[k]) - log_sum);
    r.grad[k] = -target[k] / p[k] + target_mass / sum;
  }
  return r;
}

double binary_cross_entropy(double pred, double target, double *grad) {
  double p = std::clamp(pred, kProbClamp, 1.0 - kProbClamp);
  double loss = -(target * std::log(p) + (1.0 - target) * std::log(1.0 - p));
  if (grad) *grad = -target / p + (1.0 - target) / (1.0 - p);
  return loss;
}

}  // namespace neural
}  // namespace melfew
