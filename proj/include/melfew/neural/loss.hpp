// include/melfew/neural/loss.hpp

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

#ifndef MELFEW_NEURAL_LOSS_HPP_
#define MELFEW_NEURAL_LOSS_HPP_

#include "melfew/common/matrix.hpp"

namespace melfew {
namespace neural {

struct LossResult {
  double loss = 0.0;
  Vector grad;  // d(loss)/d(prediction)
};

// Multi-class cross-entropy -sum_k y_k log (p_k / sum_j p_j) over per-class
// scores in (0,1) (sigmoid outputs, renormalized to a distribution; not a
// softmax).  Predictions are clamped into [1e-12, 1 - 1e-12] before the log,
// so a one-hot prediction matching the target yields loss ~ 0 rather than
// -log(0).  The gradient is with respect to the raw scores.
LossResult cross_entropy(const Vector &pred, const Vector &target);

// Binary cross-entropy for a single probability; grad is d(loss)/d(pred).
double binary_cross_entropy(double pred, double target, double *grad);

constexpr double kProbClamp = 1e-12;

}  // namespace neural
}  // namespace melfew

#endif  // MELFEW_NEURAL_LOSS_HPP_
