// include/melfew/metric/centroid.hpp

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

#ifndef MELFEW_METRIC_CENTROID_HPP_
#define MELFEW_METRIC_CENTROID_HPP_

#include <array>
#include <optional>

#include "melfew/data/types.hpp"
#include "melfew/metric/model.hpp"

namespace melfew {
namespace metric {

// Per-class mean vectors in input space; absent for classes the support
// does not cover.
struct ClassCenters {
  std::array<std::optional<Vector>, data::kNumEmotions> centers;
  bool complete() const {
    for (const auto &c : centers)
      if (!c) return false;
    return true;
  }
};

ClassCenters compute_centers(const std::vector<data::FeatureVector> &support);

// Embeds the (input-space) centers through the trunk.  A missing class
// makes classification for it impossible: Error("protocol").
std::array<Vector, data::kNumEmotions> embed_centers(const SiameseModel &model,
                                                     const ClassCenters &centers);

// Nearest embedded center under config.distance; distance ties resolve to
// the smaller emotion (anger < happiness < sadness).
data::Emotion classify_embedded(
    const SiameseModel &model, const Vector &x,
    const std::array<Vector, data::kNumEmotions> &embedded);

data::Emotion mel_classify(const SiameseModel &model, const Vector &x,
                           const ClassCenters &centers);

}  // namespace metric
}  // namespace melfew

#endif  // MELFEW_METRIC_CENTROID_HPP_
