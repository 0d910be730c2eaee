// include/melfew/harness/experiment.hpp
//
// Experiment descriptions and reports.  A spec file is a key-value text file
// naming a method, the dataset CSVs, and hyperparameters; running it yields
// per-repetition confusion matrices plus optional side products (pi
// histories, PCA coordinates).

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

#ifndef MELFEW_HARNESS_EXPERIMENT_HPP_
#define MELFEW_HARNESS_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "melfew/data/types.hpp"
#include "melfew/harness/metrics.hpp"
#include "melfew/metric/model.hpp"
#include "melfew/sampler/aspf.hpp"

namespace melfew {
namespace harness {

enum class Method {
  kInDomain,
  kOutOfDomain,
  kFnnFinetune,
  kMel,
  kMelS,
  kMelSAspf,
};

const char *to_string(Method method);
Method parse_method(const std::string &text);  // Error("config") on unknown

// Few-shot methods consume the k range; the domain baselines ignore it.
bool is_few_shot(Method method);

struct ExperimentSpec {
  Method method = Method::kInDomain;
  std::vector<std::string> sources;  // feature CSV paths (role source)
  std::string target;                // feature CSV path (role target)

  int k_min = 1;
  int k_max = 10;
  int repetitions = 10;
  std::uint64_t seed = 0;

  double learning_rate = 0.0005;
  int epochs = 250;           // source-side training epochs
  int finetune_epochs = 250;  // target-side adaptation epochs
  int batch_size = 32;
  int pairs_per_epoch = 0;  // 0: one pair per pool sample

  // Siamese settings (mel family only).
  metric::PairObjective objective = metric::PairObjective::kVerification;
  metric::DistanceKind distance = metric::DistanceKind::kEuclidean;
  double kappa = 1.0;
  double margin = 5.0;
  double distance_weight = 1.0;

  // ASPF settings (mel_s_aspf only).
  int aspf_iterations = 25;
  int aspf_epochs_per_iteration = 10;
  double aspf_lambda = 0.1;

  bool pca_export = false;
};

// Parses a spec file.  Unknown keys are Error("config"); so are missing
// datasets or out-of-range numbers.  `margin = inf` selects the unclamped
// loss.
ExperimentSpec load_experiment_spec(const std::string &path);
ExperimentSpec parse_experiment_spec(const std::string &text,
                                     const std::string &origin);
void validate_spec(const ExperimentSpec &spec);

struct RunRecord {
  Method method = Method::kInDomain;
  std::string source;  // source dataset name, "-" for in_domain
  int k = 0;           // 0 for the domain baselines
  int repetition = 0;
  ConfusionMatrix confusion;
  double uar = 0.0;
};

struct PcaRow {
  std::string utterance_id;
  data::Emotion emotion = data::Emotion::kAnger;
  double pc1 = 0.0;
  double pc2 = 0.0;
};

struct PiHistoryExport {
  std::string source;
  int k = 0;
  int repetition = 0;
  std::vector<sampler::PiHistoryEntry> entries;
};

struct PcaExport {
  std::string source;  // "-" for in_domain
  int k = 0;
  int repetition = 0;
  std::vector<PcaRow> rows;
};

struct ExperimentReport {
  ExperimentSpec spec;
  std::string target_name;
  std::vector<RunRecord> runs;
  std::vector<PiHistoryExport> pi_histories;
  std::vector<PcaExport> pca_exports;
  std::vector<std::string> warnings;
};

// Aggregate of one (method, source, k) group across repetitions.  The mean
// is the arithmetic mean of per-repetition UARs; pooled_uar scores the
// summed confusion matrix.  Both are reported.
struct SummaryRow {
  Method method = Method::kInDomain;
  std::string source;
  int k = 0;
  int repetitions = 0;
  double mean_uar = 0.0;
  double std_uar = 0.0;  // population standard deviation
  double pooled_uar = 0.0;
};

std::vector<SummaryRow> summarize_runs(const std::vector<RunRecord> &runs);

}  // namespace harness
}  // namespace melfew

#endif  // MELFEW_HARNESS_EXPERIMENT_HPP_
