// src/harness/experiment.cpp

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

#include "melfew/harness/experiment.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "melfew/common/error.hpp"
#include "melfew/common/kv.hpp"

namespace melfew {
namespace harness {

const char *to_string(Method method) {
  switch (method) {
    case Method::kInDomain: return "in_domain";
    case Method::kOutOfDomain: return "out_of_domain";
    case Method::kFnnFinetune: return "fnn_finetune";
    case Method::kMel: return "mel";
    case Method::kMelS: return "mel_s";
    case Method::kMelSAspf: return "mel_s_aspf";
  }
  return "?";
}

Method parse_method(const std::string &text) {
  if (text == "in_domain") return Method::kInDomain;
  if (text == "out_of_domain") return Method::kOutOfDomain;
  if (text == "fnn_finetune") return Method::kFnnFinetune;
  if (text == "mel") return Method::kMel;
  if (text == "mel_s") return Method::kMelS;
  if (text == "mel_s_aspf") return Method::kMelSAspf;
  throw Error("config", "unknown method '" + text + "'");
}

bool is_few_shot(Method method) {
  switch (method) {
    case Method::kInDomain:
    case Method::kOutOfDomain:
      return false;
    case Method::kFnnFinetune:
    case Method::kMel:
    case Method::kMelS:
    case Method::kMelSAspf:
      return true;
  }
  return false;
}

namespace {

double parse_margin(const std::string &text, const std::string &origin) {
  if (text == "inf" || text == "infinity")
    return std::numeric_limits<double>::infinity();
  return parse_double(text, origin + ": margin");
}

ExperimentSpec spec_from_kv(const KvFile &file) {
  static const std::set<std::string> known = {
      "method",          "source",
      "target",          "k_min",
      "k_max",           "repetitions",
      "seed",            "learning_rate",
      "epochs",          "finetune_epochs",
      "batch_size",      "pairs_per_epoch",
      "objective",       "distance",
      "kappa",           "margin",
      "distance_weight", "aspf_iterations",
      "aspf_epochs_per_iteration",
      "aspf_lambda",     "pca_export",
  };
  for (const auto &entry : file.entries())
    if (known.find(entry.key) == known.end())
      throw Error("config", file.origin() + ": unknown experiment key '" +
                                entry.key + "'");

  ExperimentSpec spec;
  spec.method = parse_method(file.get_string("method"));
  spec.sources = file.get_all("source");
  spec.target = file.get_string("target");

  spec.k_min = static_cast<int>(file.get_int_or("k_min", spec.k_min));
  spec.k_max = static_cast<int>(file.get_int_or("k_max", spec.k_max));
  spec.repetitions =
      static_cast<int>(file.get_int_or("repetitions", spec.repetitions));
  spec.seed = file.get_uint_or("seed", spec.seed);

  spec.learning_rate = file.get_double_or("learning_rate", spec.learning_rate);
  spec.epochs = static_cast<int>(file.get_int_or("epochs", spec.epochs));
  spec.finetune_epochs = static_cast<int>(
      file.get_int_or("finetune_epochs", spec.finetune_epochs));
  spec.batch_size =
      static_cast<int>(file.get_int_or("batch_size", spec.batch_size));
  spec.pairs_per_epoch = static_cast<int>(
      file.get_int_or("pairs_per_epoch", spec.pairs_per_epoch));

  if (const KvFile::Entry *e = file.find("objective"))
    spec.objective = metric::parse_objective(e->value);
  if (const KvFile::Entry *e = file.find("distance"))
    spec.distance = metric::parse_distance(e->value);
  spec.kappa = file.get_double_or("kappa", spec.kappa);
  if (const KvFile::Entry *e = file.find("margin"))
    spec.margin = parse_margin(e->value, file.origin());
  spec.distance_weight =
      file.get_double_or("distance_weight", spec.distance_weight);

  spec.aspf_iterations = static_cast<int>(
      file.get_int_or("aspf_iterations", spec.aspf_iterations));
  spec.aspf_epochs_per_iteration = static_cast<int>(file.get_int_or(
      "aspf_epochs_per_iteration", spec.aspf_epochs_per_iteration));
  spec.aspf_lambda = file.get_double_or("aspf_lambda", spec.aspf_lambda);

  spec.pca_export = file.get_bool_or("pca_export", spec.pca_export);

  validate_spec(spec);
  return spec;
}

}  // namespace

ExperimentSpec load_experiment_spec(const std::string &path) {
  return spec_from_kv(KvFile::parse_file(path));
}

ExperimentSpec parse_experiment_spec(const std::string &text,
                                     const std::string &origin) {
  return spec_from_kv(KvFile::parse_string(text, origin));
}

void validate_spec(const ExperimentSpec &spec) {
  if (spec.target.empty())
    throw Error("config", "experiment: target dataset is required");
  bool needs_source = spec.method != Method::kInDomain;
  if (needs_source && spec.sources.empty())
    throw Error("config", std::string("experiment: method ") +
                              to_string(spec.method) +
                              " requires at least one source dataset");
  if (spec.k_min < 1 || spec.k_max > 10 || spec.k_min > spec.k_max)
    throw Error("config",
                "experiment: k range must satisfy 1 <= k_min <= k_max <= 10");
  if (spec.repetitions < 1)
    throw Error("config", "experiment: repetitions must be >= 1");
  if (!(spec.learning_rate > 0.0) || !std::isfinite(spec.learning_rate))
    throw Error("config", "experiment: learning_rate must be positive");
  if (spec.epochs < 0 || spec.finetune_epochs < 0)
    throw Error("config", "experiment: epoch counts must be >= 0");
  if (spec.batch_size < 1)
    throw Error("config", "experiment: batch_size must be >= 1");
  if (spec.pairs_per_epoch < 0)
    throw Error("config", "experiment: pairs_per_epoch must be >= 0");
  if (spec.distance_weight < 0.0 || !std::isfinite(spec.distance_weight))
    throw Error("config",
                "experiment: distance_weight must be finite and >= 0");
  if (spec.aspf_iterations < 1 || spec.aspf_epochs_per_iteration < 1)
    throw Error("config", "experiment: aspf iteration counts must be >= 1");
  if (spec.aspf_lambda < 0.0 || !std::isfinite(spec.aspf_lambda))
    throw Error("config", "experiment: aspf_lambda must be finite and >= 0");

  metric::SiameseConfig cfg;
  cfg.kappa = spec.kappa;
  cfg.margin = spec.margin;
  cfg.objective = spec.objective;
  cfg.distance = spec.distance;
  metric::validate_config(cfg);
}

std::vector<SummaryRow> summarize_runs(const std::vector<RunRecord> &runs) {
  using Key = std::tuple<int, std::string, int>;  // method, source, k
  std::vector<Key> order;
  std::map<Key, std::vector<const RunRecord *>> groups;
  for (const RunRecord &run : runs) {
    Key key{static_cast<int>(run.method), run.source, run.k};
    auto it = groups.find(key);
    if (it == groups.end()) order.push_back(key);
    groups[key].push_back(&run);
  }

  std::vector<SummaryRow> rows;
  rows.reserve(order.size());
  for (const Key &key : order) {
    const std::vector<const RunRecord *> &group = groups[key];
    SummaryRow row;
    row.method = static_cast<Method>(std::get<0>(key));
    row.source = std::get<1>(key);
    row.k = std::get<2>(key);
    row.repetitions = static_cast<int>(group.size());

    double sum = 0.0;
    ConfusionMatrix pooled;
    for (const RunRecord *run : group) {
      sum += run->uar;
      pooled += run->confusion;
    }
    row.mean_uar = sum / static_cast<double>(group.size());
    double ss = 0.0;
    for (const RunRecord *run : group) {
      double d = run->uar - row.mean_uar;
      ss += d * d;
    }
    row.std_uar = std::sqrt(ss / static_cast<double>(group.size()));
    row.pooled_uar = uar(pooled).value;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace harness
}  // namespace melfew
