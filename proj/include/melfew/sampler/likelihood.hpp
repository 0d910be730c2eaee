// include/melfew/sampler/likelihood.hpp

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

#ifndef MELFEW_SAMPLER_LIKELIHOOD_HPP_
#define MELFEW_SAMPLER_LIKELIHOOD_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "melfew/common/matrix.hpp"
#include "melfew/data/types.hpp"

namespace melfew {
namespace sampler {

// Per-sample selection likelihoods pi.  Every sample starts at pi = 1; a
// sweep update adds lambda * |prediction - target|_1, so values never
// decrease and misclassified samples accumulate weight.
class LikelihoodTable {
 public:
  LikelihoodTable(const std::vector<std::string> &ids, double lambda);

  double lambda() const { return lambda_; }
  // Current iteration t; starts at 1, bumped once per sweep.
  int iteration() const { return iteration_; }
  std::size_t size() const { return pi_.size(); }

  double pi(const std::string &id) const;  // Error("key") for unknown ids
  bool contains(const std::string &id) const { return pi_.count(id) > 0; }

  void update(const std::string &id, const Vector &prediction,
              const Vector &target);
  void advance_iteration() { ++iteration_; }

  // (id, pi) sorted by id.
  std::vector<std::pair<std::string, double>> snapshot() const;

 private:
  double lambda_;
  int iteration_ = 1;
  std::map<std::string, double> pi_;
};

// Normalized selection probabilities over a candidate pool: pi(x) divided
// by the pool's pi sum.  The pool must be non-empty.
Vector selection_probabilities(
    const LikelihoodTable &table,
    const std::vector<const data::FeatureVector *> &pool);

}  // namespace sampler
}  // namespace melfew

#endif  // MELFEW_SAMPLER_LIKELIHOOD_HPP_
