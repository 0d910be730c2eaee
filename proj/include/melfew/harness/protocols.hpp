// include/melfew/harness/protocols.hpp
//
// The three evaluation protocols plus the FNN baseline they share.  Every
// protocol audits id-level leakage between training and test phases before
// it evaluates anything.

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

#ifndef MELFEW_HARNESS_PROTOCOLS_HPP_
#define MELFEW_HARNESS_PROTOCOLS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "melfew/data/dataset.hpp"
#include "melfew/data/splits.hpp"
#include "melfew/data/types.hpp"
#include "melfew/harness/experiment.hpp"
#include "melfew/neural/net.hpp"

namespace melfew {
namespace harness {

// Classifier FNN: input -> 32 -> 16 -> 16 (rectifier) -> 3 (sigmoid).
neural::DenseNet make_fnn(std::size_t input_dim, Rng *rng);

struct FnnHyper {
  double lr = 0.0005;
  int epochs = 250;
  int batch_size = 32;
  std::uint64_t seed = 0;
};

// Minibatch cross-entropy training; per-batch mean gradients, one Adam step
// per batch.  Returns mean per-sample loss per epoch.
std::vector<double> train_fnn(neural::DenseNet *net,
                              const std::vector<data::FeatureVector> &samples,
                              const FnnHyper &hyper);

// Argmax over per-class scores; ties resolve to the smaller emotion.
data::Emotion classify_scores(const Vector &scores);
data::Emotion fnn_classify(const neural::DenseNet &net, const Vector &x);

struct FinetuneHyper {
  FnnHyper pretrain;           // also holds the init seed
  int finetune_epochs = 250;
  std::uint64_t finetune_seed = 0;
};

// Pre-trains on the source corpus, then refines all layers on the support
// set with the same optimizer settings.  Empty support returns the
// pre-trained (out-of-domain) model unchanged.
neural::DenseNet fnn_finetune(const data::Dataset &source,
                              const std::vector<data::FeatureVector> &support,
                              const FinetuneHyper &hyper);

// Leakage audits.  Each throws Error("protocol") with the offending id.
void audit_disjoint_ids(const data::Dataset &dataset,
                        const std::vector<std::size_t> &train,
                        const std::vector<std::size_t> &test,
                        const std::string &what);
void audit_cross_corpus(const data::Dataset &train_corpus,
                        const data::Dataset &test_corpus);
void audit_loso(const data::Dataset &dataset,
                const std::vector<data::LosoFold> &folds);
void audit_few_shot(const data::Dataset &dataset,
                    const data::FewShotSplit &split);

// Loads a feature CSV and standardizes it with its own statistics.
// Degenerate dimensions are reported into *warnings.
data::Dataset load_standardized_dataset(const std::string &path,
                                        std::vector<std::string> *warnings);

// Protocol entry points; run_experiment dispatches on spec.method.
ExperimentReport run_in_domain(const ExperimentSpec &spec);
ExperimentReport run_out_of_domain(const ExperimentSpec &spec);
ExperimentReport run_few_shot(const ExperimentSpec &spec);
ExperimentReport run_experiment(const ExperimentSpec &spec);

}  // namespace harness
}  // namespace melfew

#endif  // MELFEW_HARNESS_PROTOCOLS_HPP_
