// include/melfew/metric/train.hpp

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

#ifndef MELFEW_METRIC_TRAIN_HPP_
#define MELFEW_METRIC_TRAIN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "melfew/data/types.hpp"
#include "melfew/metric/loss.hpp"
#include "melfew/metric/model.hpp"

namespace melfew {
namespace metric {

struct TrainHyper {
  double lr = 0.0005;
  int epochs = 250;
  int batch_size = 32;
  // Pairs drawn per epoch; 0 means one pair per sample in the pool.
  int pairs_per_epoch = 0;
  std::uint64_t seed = 0;
};

// Stream of training pairs.  Implementations own the sampling policy
// (uniform pairing is the adaptive policy with a flat likelihood table).
class PairSource {
 public:
  virtual ~PairSource() = default;
  virtual PairBatch next_batch(std::size_t count, Rng *rng) = 0;
  virtual std::size_t pool_size() const = 0;
};

struct TrainResult {
  std::vector<double> epoch_loss;  // mean per-pair (or per-sample) loss
  std::vector<std::string> warnings;
};

// Trains the trunk on pairs under config.objective.  Gradients are averaged
// per batch; one Adam step per batch; 0 epochs leaves the model unchanged.
// A non-finite loss raises Error("training").
TrainResult train_mel(SiameseModel *model, PairSource *pairs,
                      const TrainHyper &hyper);

struct JointHyper {
  TrainHyper base;
  double distance_weight = 1.0;  // weight of the pair term; 0 disables it
};

// Joint supervised phase: per batch, cross-entropy through head and trunk
// from labelled support samples plus distance-loss gradients through the
// trunk from support pairs.  A support smaller than one pair skips the pair
// term with a warning.
TrainResult train_mels(SiameseModel *model,
                       const std::vector<data::FeatureVector> &support,
                       PairSource *pairs, const JointHyper &hyper);

// Per-class scores from the classification head.
Vector mels_predict(const SiameseModel &model, const Vector &x);
data::Emotion mels_classify(const SiameseModel &model, const Vector &x);

}  // namespace metric
}  // namespace melfew

#endif  // MELFEW_METRIC_TRAIN_HPP_
