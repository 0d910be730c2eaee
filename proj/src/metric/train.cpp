// src/metric/train.cpp

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

#include "melfew/metric/train.hpp"

#include <cmath>
#include <numeric>

#include "melfew/common/error.hpp"
#include "melfew/neural/adam.hpp"
#include "melfew/neural/loss.hpp"

namespace melfew {
namespace metric {

namespace {

void check_hyper(const TrainHyper &h) {
  if (h.epochs < 0) throw Error("config", "epochs must be >= 0");
  if (h.batch_size < 1) throw Error("config", "batch_size must be >= 1");
  if (!(h.lr > 0.0) || !std::isfinite(h.lr))
    throw Error("config", "learning rate must be positive");
  if (h.pairs_per_epoch < 0)
    throw Error("config", "pairs_per_epoch must be >= 0");
}

}  // namespace

TrainResult train_mel(SiameseModel *model, PairSource *pairs,
                      const TrainHyper &hyper) {
  check_hyper(hyper);
  if (!pairs) throw Error("usage", "train_mel: null pair source");
  const bool verification =
      model->config.objective == PairObjective::kVerification;
  if (verification && !model->verification_head)
    throw Error("usage",
                "train_mel: verification objective needs a verification head");
  TrainResult result;
  if (hyper.epochs == 0) return result;

  std::size_t per_epoch = hyper.pairs_per_epoch > 0
                              ? static_cast<std::size_t>(hyper.pairs_per_epoch)
                              : pairs->pool_size();
  if (per_epoch == 0)
    throw Error("training", "train_mel: empty pair pool");

  Rng rng(hyper.seed);
  neural::AdamConfig acfg;
  acfg.lr = hyper.lr;
  neural::AdamState trunk_opt(model->trunk, acfg);
  neural::AdamState head_opt;
  if (verification)
    head_opt = neural::AdamState(*model->verification_head, acfg);

  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    double epoch_loss = 0.0;
    std::size_t epoch_pairs = 0;
    std::size_t remaining = per_epoch;
    while (remaining > 0) {
      std::size_t bsize =
          std::min<std::size_t>(remaining, static_cast<std::size_t>(hyper.batch_size));
      remaining -= bsize;
      PairBatch batch = pairs->next_batch(bsize, &rng);
      PairLossResult r = verification ? verification_loss(*model, batch)
                                      : mel_loss(*model, batch);
      if (!std::isfinite(r.loss))
        throw Error("training", "train_mel: non-finite loss at epoch " +
                                    std::to_string(epoch));
      double inv = 1.0 / static_cast<double>(batch.size());
      r.trunk.scale(inv);
      trunk_opt.step(&model->trunk, r.trunk);
      if (verification) {
        r.verification_head.scale(inv);
        head_opt.step(&*model->verification_head, r.verification_head);
      }
      epoch_loss += r.loss;
      epoch_pairs += batch.size();
    }
    result.epoch_loss.push_back(epoch_loss /
                                static_cast<double>(epoch_pairs));
  }
  return result;
}

TrainResult train_mels(SiameseModel *model,
                       const std::vector<data::FeatureVector> &support,
                       PairSource *pairs, const JointHyper &hyper) {
  check_hyper(hyper.base);
  if (!model->head)
    throw Error("usage", "train_mels: model has no classification head");
  if (support.empty())
    throw Error("training", "train_mels: empty support set");
  TrainResult result;
  bool use_pairs = hyper.distance_weight != 0.0;
  if (support.size() < 2 && use_pairs) {
    result.warnings.push_back(
        "support smaller than one pair; distance term skipped");
    use_pairs = false;
  }
  if (use_pairs && !pairs)
    throw Error("usage", "train_mels: null pair source");
  if (hyper.base.epochs == 0) return result;

  Rng rng(hyper.base.seed);
  neural::AdamConfig acfg;
  acfg.lr = hyper.base.lr;
  neural::AdamState trunk_opt(model->trunk, acfg);
  neural::AdamState head_opt(*model->head, acfg);

  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 0; epoch < hyper.base.epochs; ++epoch) {
    rng.shuffle(&order);
    double epoch_loss = 0.0;
    std::size_t steps = 0;
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(hyper.base.batch_size)) {
      std::size_t chunk = std::min<std::size_t>(
          static_cast<std::size_t>(hyper.base.batch_size),
          order.size() - start);
      neural::Gradients trunk_grads = model->trunk.zero_gradients();
      neural::Gradients head_grads = model->head->zero_gradients();
      double ce_sum = 0.0;
      for (std::size_t i = 0; i < chunk; ++i) {
        const data::FeatureVector &fv = support[order[start + i]];
        neural::ForwardCache ct, ch;
        Vector e = neural::forward(model->trunk, fv.values, &ct);
        Vector out = neural::forward(*model->head, e, &ch);
        neural::LossResult ce =
            neural::cross_entropy(out, data::one_hot(fv.emotion));
        ce_sum += ce.loss;
        Vector egrad(e.size(), 0.0);
        neural::backward_accumulate(*model->head, ch, ce.grad, &head_grads,
                                    &egrad);
        neural::backward_accumulate(model->trunk, ct, egrad, &trunk_grads);
      }
      double inv = 1.0 / static_cast<double>(chunk);
      trunk_grads.scale(inv);
      head_grads.scale(inv);
      double batch_loss = ce_sum * inv;

      if (use_pairs) {
        PairBatch batch = pairs->next_batch(chunk, &rng);
        PairLossResult pr = mel_loss(*model, batch);
        double pinv = hyper.distance_weight / static_cast<double>(batch.size());
        trunk_grads.add_scaled(pr.trunk, pinv);
        batch_loss += hyper.distance_weight * pr.loss /
                      static_cast<double>(batch.size());
      }
      if (!std::isfinite(batch_loss))
        throw Error("training", "train_mels: non-finite loss at epoch " +
                                    std::to_string(epoch));
      trunk_opt.step(&model->trunk, trunk_grads);
      head_opt.step(&*model->head, head_grads);
      epoch_loss += batch_loss;
      ++steps;
    }
    result.epoch_loss.push_back(epoch_loss / static_cast<double>(steps));
  }
  return result;
}

Vector mels_predict(const SiameseModel &model, const Vector &x) {
  if (!model.head)
    throw Error("usage", "mels_predict: model has no classification head");
  return neural::forward(*model.head, neural::forward(model.trunk, x));
}

data::Emotion mels_classify(const SiameseModel &model, const Vector &x) {
  Vector scores = mels_predict(model, x);
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c)
    if (scores[c] > scores[best]) best = c;  // ties keep the smaller class
  return static_cast<data::Emotion>(best);
}

}  // namespace metric
}  // namespace melfew
