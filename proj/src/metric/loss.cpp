// src/metric/loss.cpp

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

#include "melfew/metric/loss.hpp"

#include <cmath>

#include "melfew/common/error.hpp"
#include "melfew/kernels/kernels.hpp"
#include "melfew/neural/loss.hpp"

namespace melfew {
namespace metric {

namespace {

void check_batch(const SiameseModel &model, const PairBatch &batch) {
  if (batch.empty()) throw Error("usage", "pair loss: empty batch");
  for (const PairItem &p : batch) {
    if (!p.a || !p.b) throw Error("usage", "pair loss: null sample");
    if (p.a->size() != model.trunk.input_dim() ||
        p.b->size() != model.trunk.input_dim())
      throw Error("shape", "pair loss: sample dim does not match trunk");
  }
}

}  // namespace

PairLossResult mel_loss(const SiameseModel &model, const PairBatch &batch) {
  check_batch(model, batch);
  const double kappa = model.config.kappa;
  const double margin = model.config.margin;
  const bool euclidean = model.config.distance == DistanceKind::kEuclidean;

  PairLossResult r;
  r.trunk = model.trunk.zero_gradients();
  const std::size_t edim = model.embedding_dim();

  for (const PairItem &p : batch) {
    neural::ForwardCache ca, cb;
    Vector ea = neural::forward(model.trunk, *p.a, &ca);
    Vector eb = neural::forward(model.trunk, *p.b, &cb);
    double d2 = kernels::sumsq_diff(ea.data(), eb.data(), edim);
    double d = euclidean ? std::sqrt(d2) : d2;

    // scale = d(contribution)/d(d); zero once a different-class pair is
    // clamped at the margin.
    double scale;
    if (p.same_class) {
      r.loss += d;
      scale = 1.0;
    } else if (d < margin) {
      r.loss += -kappa * d;
      scale = -kappa;
    } else {
      r.loss += -kappa * margin;
      scale = 0.0;
    }
    if (scale == 0.0) continue;

    // d(d)/d(ea): euclidean (ea-eb)/d (0 subgradient at d=0), squared 2(ea-eb).
    Vector ga(edim, 0.0);
    if (euclidean) {
      if (d > 0.0)
        for (std::size_t i = 0; i < edim; ++i)
          ga[i] = scale * (ea[i] - eb[i]) / d;
    } else {
      for (std::size_t i = 0; i < edim; ++i)
        ga[i] = scale * 2.0 * (ea[i] - eb[i]);
    }
    bool all_zero = true;
    for (double g : ga)
      if (g != 0.0) {
        all_zero = false;
        break;
      }
    if (all_zero) continue;
    Vector gb(edim);
    for (std::size_t i = 0; i < edim; ++i) gb[i] = -ga[i];
    neural::backward_accumulate(model.trunk, ca, ga, &r.trunk);
    neural::backward_accumulate(model.trunk, cb, gb, &r.trunk);
  }
  return r;
}

PairLossResult verification_loss(const SiameseModel &model,
                                 const PairBatch &batch) {
  check_batch(model, batch);
  if (!model.verification_head)
    throw Error("usage", "verification_loss: model has no verification head");
  const neural::DenseNet &head = *model.verification_head;
  const std::size_t edim = model.embedding_dim();

  PairLossResult r;
  r.trunk = model.trunk.zero_gradients();
  r.verification_head = head.zero_gradients();

  for (const PairItem &p : batch) {
    neural::ForwardCache ca, cb, ch;
    Vector ea = neural::forward(model.trunk, *p.a, &ca);
    Vector eb = neural::forward(model.trunk, *p.b, &cb);
    Vector diff(edim);
    for (std::size_t i = 0; i < edim; ++i) diff[i] = std::abs(ea[i] - eb[i]);
    Vector out = neural::forward(head, diff, &ch);
    double grad = 0.0;
    r.loss += neural::binary_cross_entropy(out[0], p.same_class ? 1.0 : 0.0,
                                           &grad);
    Vector dgrad(edim, 0.0);
    neural::backward_accumulate(head, ch, {grad}, &r.verification_head,
                                &dgrad);
    // d|e_a - e_b|/d(e_a) = sign(e_a - e_b); zero where the coordinates tie.
    Vector ga(edim), gb(edim);
    for (std::size_t i = 0; i < edim; ++i) {
      double sign = ea[i] > eb[i] ? 1.0 : (ea[i] < eb[i] ? -1.0 : 0.0);
      ga[i] = dgrad[i] * sign;
      gb[i] = -ga[i];
    }
    neural::backward_accumulate(model.trunk, ca, ga, &r.trunk);
    neural::backward_accumulate(model.trunk, cb, gb, &r.trunk);
  }
  return r;
}

}  // namespace metric
}  // namespace melfew
