// src/data/types.cpp

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

#include "melfew/data/types.hpp"

#include <algorithm>

#include "melfew/common/error.hpp"

namespace melfew {
namespace data {

const char *to_string(Emotion e) {
  switch (e) {
    case Emotion::kAnger:
      return "anger";
    case Emotion::kHappiness:
      return "happiness";
    case Emotion::kSadness:
      return "sadness";
  }
  return "?";
}

Emotion parse_emotion(const std::string &name) {
  if (name == "anger") return Emotion::kAnger;
  if (name == "happiness") return Emotion::kHappiness;
  if (name == "sadness") return Emotion::kSadness;
  throw Error("schema", "unknown emotion label '" + name + "'");
}

const char *to_string(DomainRole d) {
  return d == DomainRole::kSource ? "source" : "target";
}

DomainRole parse_domain(const std::string &name) {
  if (name == "source") return DomainRole::kSource;
  if (name == "target") return DomainRole::kTarget;
  throw Error("schema", "unknown domain '" + name + "' (want source|target)");
}

Vector one_hot(Emotion e) {
  Vector y(kNumEmotions, 0.0);
  y[static_cast<std::size_t>(e)] = 1.0;
  return y;
}

std::vector<std::string> Dataset::speakers() const {
  std::vector<std::string> out;
  for (const FeatureVector &s : samples) out.push_back(s.speaker_id);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Emotion> Dataset::emotions_present() const {
  bool seen[kNumEmotions] = {false, false, false};
  for (const FeatureVector &s : samples)
    seen[static_cast<std::size_t>(s.emotion)] = true;
  std::vector<Emotion> out;
  for (Emotion e : kAllEmotions)
    if (seen[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

Dataset Dataset::subset(const std::vector<std::size_t> &indices) const {
  Dataset out;
  out.name = name;
  out.role = role;
  out.samples.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= samples.size())
      throw Error("usage", "Dataset::subset: index out of range");
    out.samples.push_back(samples[i]);
  }
  return out;
}

}  // namespace data
}  // namespace melfew
