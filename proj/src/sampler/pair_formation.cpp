// src/sampler/pair_formation.cpp

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

#include "melfew/sampler/pair_formation.hpp"

#include <algorithm>

#include "melfew/common/error.hpp"

namespace melfew {
namespace sampler {

PairFormer::PairFormer(const data::Dataset &dataset,
                       const PairFormationPolicy &policy)
    : dataset_(&dataset), policy_(policy) {
  if (dataset.samples.empty())
    throw Error("sampling", "pair formation: empty dataset");
  if (policy_.speaker_scoped) {
    speakers_ = dataset.speakers();
  } else {
    speakers_ = {""};  // one pseudo-speaker holding everything
  }
  emotions_ = dataset.emotions_present();
  pools_.resize(speakers_.size());
  for (std::size_t i = 0; i < dataset.samples.size(); ++i) {
    const data::FeatureVector &fv = dataset.samples[i];
    std::size_t sp = 0;
    if (policy_.speaker_scoped) {
      sp = static_cast<std::size_t>(
          std::lower_bound(speakers_.begin(), speakers_.end(), fv.speaker_id) -
          speakers_.begin());
    }
    pools_[sp][static_cast<std::size_t>(fv.emotion)].push_back(i);
  }
}

std::size_t PairFormer::draw_from_pool(const std::vector<std::size_t> &pool,
                                       Rng *rng,
                                       const LikelihoodTable &table) const {
  // Weighted draw proportional to pi; pi >= 1 keeps the total positive.
  double total = 0.0;
  for (std::size_t idx : pool)
    total += table.pi(dataset_->samples[idx].utterance_id);
  double r = rng->uniform() * total;
  double acc = 0.0;
  for (std::size_t idx : pool) {
    acc += table.pi(dataset_->samples[idx].utterance_id);
    if (r < acc) return idx;
  }
  return pool.back();  // r landed on the rounding edge
}

FormedPair PairFormer::form(Rng *rng, const LikelihoodTable &table) const {
  if (emotions_.size() < 2)
    throw Error("sampling",
                "pair formation: a single emotion in scope can never yield "
                "different-class pairs");
  for (int attempt = 0; attempt < policy_.max_retries; ++attempt) {
    std::size_t sp = speakers_.size() == 1 ? 0 : rng->uniform_index(speakers_.size());
    data::Emotion ck = emotions_[rng->uniform_index(emotions_.size())];
    double a = rng->uniform();
    data::Emotion cm = ck;
    if (!(a > 0.5)) {
      // Different-class branch: uniform over the other present emotions.
      std::vector<data::Emotion> others;
      for (data::Emotion e : emotions_)
        if (e != ck) others.push_back(e);
      cm = others[rng->uniform_index(others.size())];
    }
    const auto &pool_i = pools_[sp][static_cast<std::size_t>(ck)];
    const auto &pool_j = pools_[sp][static_cast<std::size_t>(cm)];
    if (pool_i.empty() || pool_j.empty()) continue;  // retry the whole draw
    FormedPair p;
    p.first = draw_from_pool(pool_i, rng, table);
    p.second = draw_from_pool(pool_j, rng, table);
    p.same_class = ck == cm;
    return p;
  }
  throw Error("sampling", "pair formation: no valid pair after " +
                              std::to_string(policy_.max_retries) +
                              " retries");
}

FormedPair form_pair(Rng *rng, const LikelihoodTable &table,
                     const data::Dataset &dataset,
                     const PairFormationPolicy &policy) {
  return PairFormer(dataset, policy).form(rng, table);
}

namespace {

std::vector<std::string> all_ids(const data::Dataset &dataset) {
  std::vector<std::string> ids;
  ids.reserve(dataset.samples.size());
  for (const data::FeatureVector &fv : dataset.samples)
    ids.push_back(fv.utterance_id);
  return ids;
}

}  // namespace

AdaptivePairSource::AdaptivePairSource(const data::Dataset &dataset,
                                       const PairFormationPolicy &policy)
    : dataset_(&dataset),
      owned_table_(LikelihoodTable(all_ids(dataset), 0.0)),
      table_(&*owned_table_),
      former_(dataset, policy) {}

AdaptivePairSource::AdaptivePairSource(const data::Dataset &dataset,
                                       const LikelihoodTable *table,
                                       const PairFormationPolicy &policy)
    : dataset_(&dataset), table_(table), former_(dataset, policy) {
  if (!table) throw Error("usage", "AdaptivePairSource: null table");
}

metric::PairBatch AdaptivePairSource::next_batch(std::size_t count, Rng *rng) {
  metric::PairBatch batch;
  batch.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    FormedPair p = former_.form(rng, *table_);
    metric::PairItem item;
    item.a = &dataset_->samples[p.first].values;
    item.b = &dataset_->samples[p.second].values;
    item.same_class = p.same_class;
    batch.push_back(item);
  }
  return batch;
}

}  // namespace sampler
}  // namespace melfew
