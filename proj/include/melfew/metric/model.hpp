// include/melfew/metric/model.hpp

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

#ifndef MELFEW_METRIC_MODEL_HPP_
#define MELFEW_METRIC_MODEL_HPP_

#include <optional>
#include <string>

#include "melfew/common/rng.hpp"
#include "melfew/neural/net.hpp"

namespace melfew {
namespace metric {

// Which pairwise objective drives the trunk: the distance loss over
// embeddings, or cross-entropy on a single-sigmoid same/different
// verification unit fed with |e_i - e_j|.
enum class PairObjective { kVerification, kDistance };

enum class DistanceKind { kEuclidean, kSquared };

const char *to_string(PairObjective o);
PairObjective parse_objective(const std::string &name);
const char *to_string(DistanceKind d);
DistanceKind parse_distance(const std::string &name);

struct SiameseConfig {
  double kappa = 1.0;    // weight on the different-class term
  double margin = 5.0;   // clamp on different-class distance; inf disables
  PairObjective objective = PairObjective::kVerification;
  DistanceKind distance = DistanceKind::kEuclidean;
};

// Shared trunk (the siamese twins are one net applied twice) plus two
// optional heads: the verification unit used while training with the
// verification objective, and the supervised classification head.
struct SiameseModel {
  SiameseConfig config;
  neural::DenseNet trunk;
  std::optional<neural::DenseNet> verification_head;  // embed -> 1, sigmoid
  std::optional<neural::DenseNet> head;               // embed -> 8 -> 3

  // Trunk input_dim -> 32 -> 16 -> 16, rectifier throughout; a
  // verification head is attached when the objective asks for one.
  static SiameseModel make(std::size_t input_dim, const SiameseConfig &cfg,
                           Rng *rng);

  void attach_verification_head(Rng *rng);
  void attach_head(Rng *rng);

  std::size_t embedding_dim() const { return trunk.output_dim(); }
};

void validate_config(const SiameseConfig &cfg);

Vector embed(const SiameseModel &model, const Vector &x);

// Distance between two embeddings / two inputs under config.distance.
double embedding_distance(const SiameseModel &model, const Vector &ea,
                          const Vector &eb);
double pair_distance(const SiameseModel &model, const Vector &a,
                     const Vector &b);

}  // namespace metric
}  // namespace melfew

#endif  // MELFEW_METRIC_MODEL_HPP_
