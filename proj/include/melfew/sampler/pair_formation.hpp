// include/melfew/sampler/pair_formation.hpp

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

#ifndef MELFEW_SAMPLER_PAIR_FORMATION_HPP_
#define MELFEW_SAMPLER_PAIR_FORMATION_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "melfew/common/rng.hpp"
#include "melfew/data/types.hpp"
#include "melfew/metric/train.hpp"
#include "melfew/sampler/likelihood.hpp"

namespace melfew {
namespace sampler {

struct PairFormationPolicy {
  // Target-domain pairing draws both samples from one speaker; the source
  // phase ignores speaker identity.
  bool speaker_scoped = true;
  int max_retries = 50;
};

struct FormedPair {
  std::size_t first = 0;
  std::size_t second = 0;
  bool same_class = false;
};

// Pair sampler: pick the scope (speaker when scoped) and an emotion
// uniformly, flip a fair coin between a same-emotion and a different-emotion
// partner pool, then draw each sample from its pool with probability
// proportional to its likelihood-table weight.  Empty partner pools retry
// the whole draw; a scope that cannot ever produce a different-class pair
// raises Error("sampling").
class PairFormer {
 public:
  PairFormer(const data::Dataset &dataset, const PairFormationPolicy &policy);

  FormedPair form(Rng *rng, const LikelihoodTable &table) const;
  std::size_t pool_size() const { return dataset_->size(); }
  const data::Dataset &dataset() const { return *dataset_; }

 private:
  const data::Dataset *dataset_;
  PairFormationPolicy policy_;
  std::vector<std::string> speakers_;
  std::vector<data::Emotion> emotions_;
  // pools_[speaker][emotion]; one pseudo-speaker when not scoped.
  std::vector<std::array<std::vector<std::size_t>, data::kNumEmotions>> pools_;

  std::size_t draw_from_pool(const std::vector<std::size_t> &pool, Rng *rng,
                             const LikelihoodTable &table) const;
};

// One-shot convenience wrapper matching the algorithm's contract.
FormedPair form_pair(Rng *rng, const LikelihoodTable &table,
                     const data::Dataset &dataset,
                     const PairFormationPolicy &policy);

// metric::PairSource over a dataset: Algorithm-1 pairing against a
// likelihood table (an external one, or an owned all-ones table for the
// uniform case).
class AdaptivePairSource : public metric::PairSource {
 public:
  // Uniform pairing: flat table owned internally.
  AdaptivePairSource(const data::Dataset &dataset,
                     const PairFormationPolicy &policy);
  // Adaptive pairing against a caller-owned table.
  AdaptivePairSource(const data::Dataset &dataset,
                     const LikelihoodTable *table,
                     const PairFormationPolicy &policy);

  metric::PairBatch next_batch(std::size_t count, Rng *rng) override;
  std::size_t pool_size() const override { return former_.pool_size(); }

 private:
  const data::Dataset *dataset_;
  std::optional<LikelihoodTable> owned_table_;
  const LikelihoodTable *table_;
  PairFormer former_;
};

}  // namespace sampler
}  // namespace melfew

#endif  // MELFEW_SAMPLER_PAIR_FORMATION_HPP_
