// src/sampler/aspf.cpp

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

#include "melfew/sampler/aspf.hpp"

#include <cstdio>
#include <fstream>

#include "melfew/common/error.hpp"
#include "melfew/sampler/pair_formation.hpp"

namespace melfew {
namespace sampler {

AspfResult train_mels_aspf(metric::SiameseModel *model,
                           const std::vector<data::FeatureVector> &support,
                           const AspfHyper &hyper) {
  if (hyper.iterations < 1)
    throw Error("config", "aspf: iterations must be >= 1");
  if (hyper.epochs_per_iteration < 0)
    throw Error("config", "aspf: epochs_per_iteration must be >= 0");
  if (support.empty())
    throw Error("training", "aspf: empty support set");

  data::Dataset support_ds;
  support_ds.name = "support";
  support_ds.role = data::DomainRole::kTarget;
  support_ds.samples = support;

  std::vector<std::string> ids;
  ids.reserve(support.size());
  for (const data::FeatureVector &fv : support) ids.push_back(fv.utterance_id);
  LikelihoodTable table(ids, hyper.lambda);

  PairFormationPolicy policy;  // target phase: within-speaker pairs
  policy.speaker_scoped = true;

  AspfResult result;
  for (int t = 1; t <= hyper.iterations; ++t) {
    AdaptivePairSource pairs(support_ds, &table, policy);
    metric::JointHyper jh = hyper.joint;
    jh.base.epochs = hyper.epochs_per_iteration;
    jh.base.seed = derive_seed(hyper.joint.base.seed,
                               {static_cast<std::uint64_t>(t)});
    metric::TrainResult tr = train_mels(model, support, &pairs, jh);
    result.epoch_loss.insert(result.epoch_loss.end(), tr.epoch_loss.begin(),
                             tr.epoch_loss.end());
    for (std::string &w : tr.warnings)
      result.warnings.push_back(std::move(w));

    // Likelihood sweep in support order, then bump the iteration counter.
    for (const data::FeatureVector &fv : support) {
      Vector pred = metric::mels_predict(*model, fv.values);
      table.update(fv.utterance_id, pred, data::one_hot(fv.emotion));
    }
    table.advance_iteration();
    for (const auto &[id, pi] : table.snapshot())
      result.pi_history.push_back({t, id, pi});
  }
  return result;
}

void write_pi_history_csv(const std::string &path,
                          const std::vector<PiHistoryEntry> &history) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write pi history '" + path + "'");
  out << "iteration,utterance_id,pi\n";
  char buf[64];
  for (const PiHistoryEntry &e : history) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.pi);
    out << e.iteration << "," << e.utterance_id << "," << buf << "\n";
  }
  if (!out) throw Error("io", "short write on '" + path + "'");
}

}  // namespace sampler
}  // namespace melfew
