// src/metric/model.cpp

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

#include "melfew/metric/model.hpp"

#include <cmath>

#include "melfew/common/error.hpp"
#include "melfew/kernels/kernels.hpp"

namespace melfew {
namespace metric {

const char *to_string(PairObjective o) {
  return o == PairObjective::kVerification ? "verification" : "distance";
}

PairObjective parse_objective(const std::string &name) {
  if (name == "verification") return PairObjective::kVerification;
  if (name == "distance") return PairObjective::kDistance;
  throw Error("config", "unknown objective '" + name +
                            "' (want verification|distance)");
}

const char *to_string(DistanceKind d) {
  return d == DistanceKind::kEuclidean ? "euclidean" : "squared";
}

DistanceKind parse_distance(const std::string &name) {
  if (name == "euclidean") return DistanceKind::kEuclidean;
  if (name == "squared") return DistanceKind::kSquared;
  throw Error("config",
              "unknown distance '" + name + "' (want euclidean|squared)");
}

void validate_config(const SiameseConfig &cfg) {
  if (!(cfg.kappa > 0.0) || !std::isfinite(cfg.kappa))
    throw Error("config", "kappa must be positive and finite");
  if (!(cfg.margin > 0.0))  // +inf is allowed: the unclamped loss
    throw Error("config", "margin must be positive (inf disables the clamp)");
}

SiameseModel SiameseModel::make(std::size_t input_dim,
                                const SiameseConfig &cfg, Rng *rng) {
  validate_config(cfg);
  SiameseModel m;
  m.config = cfg;
  using neural::Activation;
  m.trunk = neural::DenseNet::glorot_init(
      {{input_dim, 32, Activation::kRectifier},
       {32, 16, Activation::kRectifier},
       {16, 16, Activation::kRectifier}},
      rng);
  if (cfg.objective == PairObjective::kVerification)
    m.attach_verification_head(rng);
  return m;
}

void SiameseModel::attach_verification_head(Rng *rng) {
  verification_head = neural::DenseNet::glorot_init(
      {{embedding_dim(), 1, neural::Activation::kSigmoid}}, rng);
}

void SiameseModel::attach_head(Rng *rng) {
  head = neural::DenseNet::glorot_init(
      {{embedding_dim(), 8, neural::Activation::kRectifier},
       {8, 3, neural::Activation::kSigmoid}},
      rng);
}

Vector embed(const SiameseModel &model, const Vector &x) {
  return neural::forward(model.trunk, x);
}

double embedding_distance(const SiameseModel &model, const Vector &ea,
                          const Vector &eb) {
  if (ea.size() != eb.size())
    throw Error("shape", "embedding_distance: dim mismatch");
  double d2 = kernels::sumsq_diff(ea.data(), eb.data(), ea.size());
  return model.config.distance == DistanceKind::kEuclidean ? std::sqrt(d2) : d2;
}

double pair_distance(const SiameseModel &model, const Vector &a,
                     const Vector &b) {
  return embedding_distance(model, embed(model, a), embed(model, b));
}

}  // namespace metric
}  // namespace melfew
