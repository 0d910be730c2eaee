// src/metric/centroid.cpp

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

#include "melfew/metric/centroid.hpp"

#include "melfew/common/error.hpp"

namespace melfew {
namespace metric {

ClassCenters compute_centers(const std::vector<data::FeatureVector> &support) {
  if (support.empty())
    throw Error("protocol", "compute_centers: empty support set");
  const std::size_t dim = support.front().values.size();
  std::array<Vector, data::kNumEmotions> sums;
  std::array<std::size_t, data::kNumEmotions> counts{};
  for (auto &s : sums) s.assign(dim, 0.0);
  for (const data::FeatureVector &fv : support) {
    if (fv.values.size() != dim)
      throw Error("shape", "compute_centers: ragged support dims");
    std::size_t c = static_cast<std::size_t>(fv.emotion);
    for (std::size_t d = 0; d < dim; ++d) sums[c][d] += fv.values[d];
    ++counts[c];
  }
  ClassCenters out;
  for (std::size_t c = 0; c < data::kNumEmotions; ++c) {
    if (counts[c] == 0) continue;
    for (double &v : sums[c]) v /= static_cast<double>(counts[c]);
    out.centers[c] = std::move(sums[c]);
  }
  return out;
}

std::array<Vector, data::kNumEmotions> embed_centers(
    const SiameseModel &model, const ClassCenters &centers) {
  if (!centers.complete())
    throw Error("protocol",
                "classification impossible: support misses a class center");
  std::array<Vector, data::kNumEmotions> out;
  for (std::size_t c = 0; c < data::kNumEmotions; ++c)
    out[c] = embed(model, *centers.centers[c]);
  return out;
}

data::Emotion classify_embedded(
    const SiameseModel &model, const Vector &x,
    const std::array<Vector, data::kNumEmotions> &embedded) {
  Vector e = embed(model, x);
  std::size_t best = 0;
  double best_d = embedding_distance(model, e, embedded[0]);
  for (std::size_t c = 1; c < data::kNumEmotions; ++c) {
    double d = embedding_distance(model, e, embedded[c]);
    if (d < best_d) {  // strict: ties keep the smaller emotion
      best_d = d;
      best = c;
    }
  }
  return static_cast<data::Emotion>(best);
}

data::Emotion mel_classify(const SiameseModel &model, const Vector &x,
                           const ClassCenters &centers) {
  return classify_embedded(model, x, embed_centers(model, centers));
}

}  // namespace metric
}  // namespace melfew
