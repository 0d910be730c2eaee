// src/data/splits.cpp

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

#include "melfew/data/splits.hpp"

#include <algorithm>
#include <map>

#include "melfew/common/error.hpp"
#include "melfew/common/rng.hpp"

namespace melfew {
namespace data {

FewShotSplit few_shot_split(const Dataset &target, int k, std::uint64_t seed) {
  if (k < 1 || k > 10)
    throw Error("usage", "few_shot_split: k must be in 1..10, got " +
                             std::to_string(k));
  if (target.samples.empty())
    throw Error("protocol", "few_shot_split: empty dataset");

  FewShotSplit split;
  split.k = k;
  split.seed = seed;

  // Cells keyed by (speaker, emotion); ordered map keeps the draw sequence
  // independent of hash layout.
  std::map<std::pair<std::string, int>, std::vector<std::size_t>> cells;
  for (std::size_t i = 0; i < target.samples.size(); ++i) {
    const FeatureVector &fv = target.samples[i];
    cells[{fv.speaker_id, static_cast<int>(fv.emotion)}].push_back(i);
  }

  std::vector<std::string> speakers = target.speakers();
  for (const std::string &sp : speakers)
    for (Emotion e : kAllEmotions)
      if (!cells.count({sp, static_cast<int>(e)}))
        split.warnings.push_back("speaker '" + sp + "' has no '" +
                                 to_string(e) + "' samples; cell skipped");

  Rng rng(seed);
  for (auto &[key, indices] : cells) {
    std::vector<std::size_t> order = indices;
    rng.shuffle(&order);
    std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k),
                                             order.size());
    if (take == order.size())
      split.warnings.push_back("cell (" + key.first + ", " +
                               to_string(static_cast<Emotion>(key.second)) +
                               ") has only " + std::to_string(order.size()) +
                               " samples; all go to support");
    for (std::size_t i = 0; i < order.size(); ++i)
      (i < take ? split.support : split.test).push_back(order[i]);
  }
  std::sort(split.support.begin(), split.support.end());
  std::sort(split.test.begin(), split.test.end());

  if (split.test.empty())
    throw Error("protocol", "few_shot_split: test set is empty (k covers "
                            "every cell)");
  return split;
}

std::vector<LosoFold> loso_folds(const Dataset &dataset) {
  std::vector<std::string> speakers = dataset.speakers();
  if (speakers.size() < 2)
    throw Error("protocol", "loso_folds: need at least 2 speakers, got " +
                                std::to_string(speakers.size()));
  std::vector<LosoFold> folds;
  folds.reserve(speakers.size());
  for (const std::string &sp : speakers) {
    LosoFold fold;
    fold.held_out_speaker = sp;
    for (std::size_t i = 0; i < dataset.samples.size(); ++i)
      (dataset.samples[i].speaker_id == sp ? fold.test : fold.train)
          .push_back(i);
    folds.push_back(std::move(fold));
  }
  return folds;
}

}  // namespace data
}  // namespace melfew
