// include/melfew/data/types.hpp

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

#ifndef MELFEW_DATA_TYPES_HPP_
#define MELFEW_DATA_TYPES_HPP_

#include <string>
#include <vector>

#include "melfew/common/matrix.hpp"

namespace melfew {
namespace data {

// Fixed three-class label set.  Ordering matters: ties in classification
// resolve toward the smaller enum value (anger first).
enum class Emotion { kAnger = 0, kHappiness = 1, kSadness = 2 };

inline constexpr std::size_t kNumEmotions = 3;
inline constexpr Emotion kAllEmotions[] = {Emotion::kAnger, Emotion::kHappiness,
                                           Emotion::kSadness};

const char *to_string(Emotion e);
Emotion parse_emotion(const std::string &name);  // Error("schema") if unknown

enum class DomainRole { kSource, kTarget };

const char *to_string(DomainRole d);
DomainRole parse_domain(const std::string &name);

Vector one_hot(Emotion e);

struct FeatureVector {
  std::string utterance_id;
  std::string speaker_id;
  Emotion emotion = Emotion::kAnger;
  DomainRole domain = DomainRole::kSource;
  Vector values;
};

// A labelled corpus.  Row order is load order and is part of the
// deterministic contract (splits and sweeps iterate it in order).
struct Dataset {
  std::string name;
  DomainRole role = DomainRole::kSource;
  std::vector<FeatureVector> samples;

  std::size_t size() const { return samples.size(); }
  std::size_t dim() const { return samples.empty() ? 0 : samples.front().values.size(); }
  // Distinct speaker ids, sorted.
  std::vector<std::string> speakers() const;
  // Distinct emotions present, in enum order.
  std::vector<Emotion> emotions_present() const;
  Dataset subset(const std::vector<std::size_t> &indices) const;
};

}  // namespace data
}  // namespace melfew

#endif  // MELFEW_DATA_TYPES_HPP_
