// include/melfew/metric/loss.hpp

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

#ifndef MELFEW_METRIC_LOSS_HPP_
#define MELFEW_METRIC_LOSS_HPP_

#include <vector>

#include "melfew/metric/model.hpp"

namespace melfew {
namespace metric {

struct PairItem {
  const Vector *a = nullptr;
  const Vector *b = nullptr;
  bool same_class = false;
};

using PairBatch = std::vector<PairItem>;

struct PairLossResult {
  double loss = 0.0;
  neural::Gradients trunk;
  neural::Gradients verification_head;  // filled by verification_loss only
};

// Distance loss summed over the batch: same-class pairs contribute +d,
// different-class pairs contribute -kappa * min(d, margin).  Gradients flow
// through both streams of the shared trunk.  An all-same or all-different
// batch is fine; an empty batch is a usage error.
PairLossResult mel_loss(const SiameseModel &model, const PairBatch &batch);

// Binary cross-entropy of the verification unit on |e_a - e_b| against
// same=1/different=0, summed over the batch.
PairLossResult verification_loss(const SiameseModel &model,
                                 const PairBatch &batch);

}  // namespace metric
}  // namespace melfew

#endif  // MELFEW_METRIC_LOSS_HPP_
