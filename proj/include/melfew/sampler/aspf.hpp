// include/melfew/sampler/aspf.hpp

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

#ifndef MELFEW_SAMPLER_ASPF_HPP_
#define MELFEW_SAMPLER_ASPF_HPP_

#include <string>
#include <vector>

#include "melfew/metric/train.hpp"
#include "melfew/sampler/likelihood.hpp"

namespace melfew {
namespace sampler {

struct AspfHyper {
  int iterations = 25;          // outer sweeps T
  int epochs_per_iteration = 10;
  double lambda = 0.1;
  metric::JointHyper joint;     // lr/batch/seed plus distance term weight
};

struct PiHistoryEntry {
  int iteration = 0;  // 1-based sweep index; pi recorded after its sweep
  std::string utterance_id;
  double pi = 1.0;
};

struct AspfResult {
  std::vector<double> epoch_loss;
  std::vector<PiHistoryEntry> pi_history;
  std::vector<std::string> warnings;
};

// Adaptive sample-pair formation around the joint objective: T rounds of a
// few training epochs with pi-weighted pair draws, each followed by a sweep
// that bumps pi by lambda * |prediction - one_hot(label)|_1 per sample.
AspfResult train_mels_aspf(metric::SiameseModel *model,
                           const std::vector<data::FeatureVector> &support,
                           const AspfHyper &hyper);

// CSV "iteration,utterance_id,pi".
void write_pi_history_csv(const std::string &path,
                          const std::vector<PiHistoryEntry> &history);

}  // namespace sampler
}  // namespace melfew

#endif  // MELFEW_SAMPLER_ASPF_HPP_
