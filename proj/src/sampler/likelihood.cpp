// src/sampler/likelihood.cpp

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

#include "melfew/sampler/likelihood.hpp"

#include <cmath>

#include "melfew/common/error.hpp"

namespace melfew {
namespace sampler {

LikelihoodTable::LikelihoodTable(const std::vector<std::string> &ids,
                                 double lambda)
    : lambda_(lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw Error("config", "likelihood table: lambda must be >= 0");
  if (ids.empty())
    throw Error("usage", "likelihood table: no sample ids");
  for (const std::string &id : ids)
    if (!pi_.emplace(id, 1.0).second)
      throw Error("usage", "likelihood table: duplicate id '" + id + "'");
}

double LikelihoodTable::pi(const std::string &id) const {
  auto it = pi_.find(id);
  if (it == pi_.end())
    throw Error("key", "likelihood table: unknown id '" + id + "'");
  return it->second;
}

void LikelihoodTable::update(const std::string &id, const Vector &prediction,
                             const Vector &target) {
  auto it = pi_.find(id);
  if (it == pi_.end())
    throw Error("key", "likelihood table: unknown id '" + id + "'");
  if (prediction.size() != target.size())
    throw Error("shape", "likelihood update: prediction and target dims differ");
  double err = 0.0;
  for (std::size_t k = 0; k < prediction.size(); ++k)
    err += std::abs(prediction[k] - target[k]);
  it->second += lambda_ * err;
}

std::vector<std::pair<std::string, double>> LikelihoodTable::snapshot() const {
  return {pi_.begin(), pi_.end()};  // std::map iterates sorted by id
}

Vector selection_probabilities(
    const LikelihoodTable &table,
    const std::vector<const data::FeatureVector *> &pool) {
  if (pool.empty())
    throw Error("sampling", "selection_probabilities: empty pool");
  Vector probs(pool.size());
  double total = 0.0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    probs[i] = table.pi(pool[i]->utterance_id);
    total += probs[i];
  }
  for (double &p : probs) p /= total;  // total >= pool size since pi >= 1
  return probs;
}

}  // namespace sampler
}  // namespace melfew
