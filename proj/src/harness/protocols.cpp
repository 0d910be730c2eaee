// src/harness/protocols.cpp

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

#include "melfew/harness/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "melfew/common/error.hpp"
#include "melfew/common/rng.hpp"
#include "melfew/features/standardize.hpp"
#include "melfew/harness/pca.hpp"
#include "melfew/metric/centroid.hpp"
#include "melfew/metric/train.hpp"
#include "melfew/neural/adam.hpp"
#include "melfew/neural/loss.hpp"
#include "melfew/sampler/aspf.hpp"
#include "melfew/sampler/pair_formation.hpp"

namespace melfew {
namespace harness {

namespace {

// Seed-derivation stream tags.  Every phase of every sub-experiment draws
// from its own stream so adding a phase never perturbs another.
constexpr std::uint64_t kPhaseInit = 1;
constexpr std::uint64_t kPhaseTrain = 2;
constexpr std::uint64_t kPhaseSplit = 3;
constexpr std::uint64_t kPhaseAdapt = 4;
constexpr std::uint64_t kPhaseHead = 5;
constexpr std::uint64_t kPhasePca = 6;

std::string run_context(Method method, const std::string &source, int k,
                        int rep) {
  std::string ctx = to_string(method);
  if (source != "-") ctx += " source=" + source;
  if (k > 0) ctx += " k=" + std::to_string(k);
  ctx += " rep=" + std::to_string(rep);
  return ctx;
}

void push_run(ExperimentReport *report, Method method,
              const std::string &source, int k, int rep,
              const ConfusionMatrix &cm) {
  UarResult u = uar(cm);
  for (const std::string &w : u.warnings)
    report->warnings.push_back(run_context(method, source, k, rep) + ": " + w);
  RunRecord run;
  run.method = method;
  run.source = source;
  run.k = k;
  run.repetition = rep;
  run.confusion = cm;
  run.uar = u.value;
  report->runs.push_back(std::move(run));
}

using ClassifyFn = std::function<data::Emotion(const Vector &)>;

ConfusionMatrix evaluate_indices(const data::Dataset &ds,
                                 const std::vector<std::size_t> &indices,
                                 const ClassifyFn &classify) {
  ConfusionMatrix cm;
  for (std::size_t idx : indices) {
    const data::FeatureVector &fv = ds.samples[idx];
    cm.add(fv.emotion, classify(fv.values));
  }
  return cm;
}

ConfusionMatrix evaluate_all(const data::Dataset &ds,
                             const ClassifyFn &classify) {
  ConfusionMatrix cm;
  for (const data::FeatureVector &fv : ds.samples)
    cm.add(fv.emotion, classify(fv.values));
  return cm;
}

// Post-activation of the layer feeding the output layer.
Vector fnn_last_hidden(const neural::DenseNet &net, const Vector &x) {
  if (net.num_layers() < 2)
    throw Error("export", "pca: net has no hidden layer");
  neural::ForwardCache cache;
  neural::forward(net, x, &cache);
  return cache.post[net.num_layers() - 2];
}

Vector mels_last_hidden(const metric::SiameseModel &model, const Vector &x) {
  if (!model.head)
    throw Error("export", "pca: model has no classification head");
  Vector e = metric::embed(model, x);
  neural::ForwardCache cache;
  neural::forward(*model.head, e, &cache);
  return cache.post[0];
}

using ActivationFn = std::function<Vector(const Vector &)>;

void push_pca(ExperimentReport *report, const data::Dataset &target,
              const std::string &source, int k, int rep,
              const ActivationFn &activation) {
  std::vector<Vector> acts;
  acts.reserve(target.size());
  for (const data::FeatureVector &fv : target.samples)
    acts.push_back(activation(fv.values));
  PcaExport exp;
  exp.source = source;
  exp.k = k;
  exp.repetition = rep;
  exp.rows = pca_rows(acts, target.samples);
  report->pca_exports.push_back(std::move(exp));
}

neural::DenseNet pretrain_fnn(const data::Dataset &source,
                              const FnnHyper &hyper) {
  if (source.samples.empty())
    throw Error("training", "fnn pre-training: empty source corpus");
  Rng init(derive_seed(hyper.seed, {kPhaseInit}));
  neural::DenseNet net = make_fnn(source.dim(), &init);
  train_fnn(&net, source.samples, hyper);
  return net;
}

FnnHyper fnn_hyper(const ExperimentSpec &spec, int epochs,
                   std::uint64_t seed) {
  FnnHyper h;
  h.lr = spec.learning_rate;
  h.epochs = epochs;
  h.batch_size = spec.batch_size;
  h.seed = seed;
  return h;
}

metric::SiameseConfig siamese_config(const ExperimentSpec &spec) {
  metric::SiameseConfig cfg;
  cfg.kappa = spec.kappa;
  cfg.margin = spec.margin;
  cfg.objective = spec.objective;
  cfg.distance = spec.distance;
  return cfg;
}

metric::TrainHyper metric_hyper(const ExperimentSpec &spec, int epochs,
                                std::uint64_t seed) {
  metric::TrainHyper h;
  h.lr = spec.learning_rate;
  h.epochs = epochs;
  h.batch_size = spec.batch_size;
  h.pairs_per_epoch = spec.pairs_per_epoch;
  h.seed = seed;
  return h;
}

metric::SiameseModel pretrain_siamese(const ExperimentSpec &spec,
                                      const data::Dataset &source,
                                      std::uint64_t si, std::uint64_t rep,
                                      std::vector<std::string> *warnings) {
  Rng init(derive_seed(spec.seed, {si, rep, kPhaseInit}));
  metric::SiameseModel model =
      metric::SiameseModel::make(source.dim(), siamese_config(spec), &init);
  // Source phase ignores speaker identity when forming pairs.
  sampler::PairFormationPolicy policy;
  policy.speaker_scoped = false;
  sampler::AdaptivePairSource pairs(source, policy);
  metric::TrainHyper hyper = metric_hyper(
      spec, spec.epochs, derive_seed(spec.seed, {si, rep, kPhaseTrain}));
  metric::TrainResult tr = metric::train_mel(&model, &pairs, hyper);
  if (warnings)
    for (std::string &w : tr.warnings) warnings->push_back(std::move(w));
  return model;
}

}  // namespace

neural::DenseNet make_fnn(std::size_t input_dim, Rng *rng) {
  using neural::Activation;
  std::vector<neural::LayerSpec> layers = {
      {input_dim, 32, Activation::kRectifier},
      {32, 16, Activation::kRectifier},
      {16, 16, Activation::kRectifier},
      {16, data::kNumEmotions, Activation::kSigmoid},
  };
  return neural::DenseNet::glorot_init(std::move(layers), rng);
}

std::vector<double> train_fnn(neural::DenseNet *net,
                              const std::vector<data::FeatureVector> &samples,
                              const FnnHyper &hyper) {
  if (net == nullptr) throw Error("usage", "train_fnn: null net");
  if (hyper.batch_size < 1)
    throw Error("config", "train_fnn: batch_size must be >= 1");
  std::vector<double> losses;
  if (samples.empty() || hyper.epochs <= 0) return losses;

  neural::AdamConfig acfg;
  acfg.lr = hyper.lr;
  neural::AdamState adam(*net, acfg);
  Rng rng(hyper.seed);
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  neural::Gradients grads = net->zero_gradients();

  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    rng.shuffle(&order);
    double total = 0.0;
    const std::size_t batch = static_cast<std::size_t>(hyper.batch_size);
    for (std::size_t start = 0; start < order.size(); start += batch) {
      const std::size_t end = std::min(order.size(), start + batch);
      grads.set_zero();
      for (std::size_t i = start; i < end; ++i) {
        const data::FeatureVector &fv = samples[order[i]];
        neural::ForwardCache cache;
        Vector pred = neural::forward(*net, fv.values, &cache);
        neural::LossResult lr =
            neural::cross_entropy(pred, data::one_hot(fv.emotion));
        total += lr.loss;
        neural::backward_accumulate(*net, cache, lr.grad, &grads);
      }
      grads.scale(1.0 / static_cast<double>(end - start));
      adam.step(net, grads);
    }
    double mean = total / static_cast<double>(samples.size());
    if (!std::isfinite(mean))
      throw Error("training", "train_fnn: non-finite loss at epoch " +
                                  std::to_string(epoch));
    losses.push_back(mean);
  }
  return losses;
}

data::Emotion classify_scores(const Vector &scores) {
  if (scores.size() != data::kNumEmotions)
    throw Error("shape", "classify_scores: expected one score per class");
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c)
    if (scores[c] > scores[best]) best = c;  // ties keep the smaller class
  return static_cast<data::Emotion>(best);
}

data::Emotion fnn_classify(const neural::DenseNet &net, const Vector &x) {
  return classify_scores(neural::forward(net, x));
}

neural::DenseNet fnn_finetune(const data::Dataset &source,
                              const std::vector<data::FeatureVector> &support,
                              const FinetuneHyper &hyper) {
  neural::DenseNet net = pretrain_fnn(source, hyper.pretrain);
  FnnHyper ft = hyper.pretrain;
  ft.epochs = hyper.finetune_epochs;
  ft.seed = hyper.finetune_seed;
  train_fnn(&net, support, ft);  // empty support: no-op, out-of-domain model
  return net;
}

void audit_disjoint_ids(const data::Dataset &dataset,
                        const std::vector<std::size_t> &train,
                        const std::vector<std::size_t> &test,
                        const std::string &what) {
  std::set<std::string> train_ids;
  for (std::size_t idx : train) {
    if (idx >= dataset.size())
      throw Error("protocol", what + ": train index out of range");
    train_ids.insert(dataset.samples[idx].utterance_id);
  }
  for (std::size_t idx : test) {
    if (idx >= dataset.size())
      throw Error("protocol", what + ": test index out of range");
    const std::string &id = dataset.samples[idx].utterance_id;
    if (train_ids.count(id) > 0)
      throw Error("protocol",
                  what + ": test utterance '" + id + "' leaks into training");
  }
}

void audit_cross_corpus(const data::Dataset &train_corpus,
                        const data::Dataset &test_corpus) {
  std::set<std::string> train_ids;
  for (const data::FeatureVector &fv : train_corpus.samples)
    train_ids.insert(fv.utterance_id);
  for (const data::FeatureVector &fv : test_corpus.samples)
    if (train_ids.count(fv.utterance_id) > 0)
      throw Error("protocol", "utterance '" + fv.utterance_id +
                                  "' appears in both training corpus '" +
                                  train_corpus.name + "' and test corpus '" +
                                  test_corpus.name + "'");
}

void audit_loso(const data::Dataset &dataset,
                const std::vector<data::LosoFold> &folds) {
  if (folds.empty()) throw Error("protocol", "loso audit: no folds");
  std::vector<int> test_seen(dataset.size(), 0);
  for (const data::LosoFold &fold : folds) {
    const std::string what = "loso fold '" + fold.held_out_speaker + "'";
    std::vector<int> in_fold(dataset.size(), 0);
    for (std::size_t idx : fold.train) {
      if (idx >= dataset.size())
        throw Error("protocol", what + ": train index out of range");
      if (dataset.samples[idx].speaker_id == fold.held_out_speaker)
        throw Error("protocol", what + ": held-out speaker sample '" +
                                    dataset.samples[idx].utterance_id +
                                    "' in training");
      ++in_fold[idx];
    }
    for (std::size_t idx : fold.test) {
      if (idx >= dataset.size())
        throw Error("protocol", what + ": test index out of range");
      if (dataset.samples[idx].speaker_id != fold.held_out_speaker)
        throw Error("protocol", what + ": foreign speaker sample '" +
                                    dataset.samples[idx].utterance_id +
                                    "' in test");
      ++in_fold[idx];
      ++test_seen[idx];
    }
    for (std::size_t i = 0; i < dataset.size(); ++i)
      if (in_fold[i] != 1)
        throw Error("protocol", what + ": sample '" +
                                    dataset.samples[i].utterance_id +
                                    "' not partitioned exactly once");
    audit_disjoint_ids(dataset, fold.train, fold.test, what);
  }
  for (std::size_t i = 0; i < dataset.size(); ++i)
    if (test_seen[i] != 1)
      throw Error("protocol", "loso audit: sample '" +
                                  dataset.samples[i].utterance_id +
                                  "' tested " + std::to_string(test_seen[i]) +
                                  " times across folds");
}

void audit_few_shot(const data::Dataset &dataset,
                    const data::FewShotSplit &split) {
  std::vector<int> seen(dataset.size(), 0);
  for (std::size_t idx : split.support) {
    if (idx >= dataset.size())
      throw Error("protocol", "few-shot audit: support index out of range");
    ++seen[idx];
  }
  for (std::size_t idx : split.test) {
    if (idx >= dataset.size())
      throw Error("protocol", "few-shot audit: test index out of range");
    ++seen[idx];
  }
  for (std::size_t i = 0; i < dataset.size(); ++i)
    if (seen[i] > 1)
      throw Error("protocol", "few-shot audit: sample '" +
                                  dataset.samples[i].utterance_id +
                                  "' assigned more than once");
  audit_disjoint_ids(dataset, split.support, split.test, "few-shot split");
}

data::Dataset load_standardized_dataset(const std::string &path,
                                        std::vector<std::string> *warnings) {
  data::Dataset ds = data::load_feature_csv(path);
  std::vector<Vector> rows;
  rows.reserve(ds.size());
  for (const data::FeatureVector &fv : ds.samples) rows.push_back(fv.values);
  features::Standardizer st = features::fit_standardizer(rows);
  for (data::FeatureVector &fv : ds.samples) st.apply_in_place(&fv.values);
  if (warnings && !st.degenerate_dims.empty())
    warnings->push_back(
        "dataset '" + ds.name + "': " +
        std::to_string(st.degenerate_dims.size()) +
        " zero-variance dimensions passed through unscaled");
  return ds;
}

ExperimentReport run_in_domain(const ExperimentSpec &spec) {
  if (spec.method != Method::kInDomain)
    throw Error("usage", "run_in_domain: spec selects a different method");
  ExperimentReport report;
  report.spec = spec;
  data::Dataset target = load_standardized_dataset(spec.target,
                                                   &report.warnings);
  report.target_name = target.name;
  std::vector<data::LosoFold> folds = data::loso_folds(target);
  audit_loso(target, folds);

  for (int rep = 0; rep < spec.repetitions; ++rep) {
    const std::uint64_t r = static_cast<std::uint64_t>(rep);
    ConfusionMatrix cm;
    for (std::size_t fi = 0; fi < folds.size(); ++fi) {
      const data::LosoFold &fold = folds[fi];
      Rng init(derive_seed(spec.seed, {r, fi, kPhaseInit}));
      neural::DenseNet net = make_fnn(target.dim(), &init);
      data::Dataset train = target.subset(fold.train);
      train_fnn(&net, train.samples,
                fnn_hyper(spec, spec.epochs,
                          derive_seed(spec.seed, {r, fi, kPhaseTrain})));
      cm += evaluate_indices(target, fold.test, [&](const Vector &x) {
        return fnn_classify(net, x);
      });
    }
    push_run(&report, spec.method, "-", 0, rep, cm);
  }

  if (spec.pca_export) {
    Rng init(derive_seed(spec.seed, {kPhasePca, kPhaseInit}));
    neural::DenseNet net = make_fnn(target.dim(), &init);
    train_fnn(&net, target.samples,
              fnn_hyper(spec, spec.epochs,
                        derive_seed(spec.seed, {kPhasePca, kPhaseTrain})));
    push_pca(&report, target, "-", 0, 0, [&](const Vector &x) {
      return fnn_last_hidden(net, x);
    });
  }
  return report;
}

ExperimentReport run_out_of_domain(const ExperimentSpec &spec) {
  if (spec.method != Method::kOutOfDomain)
    throw Error("usage", "run_out_of_domain: spec selects a different method");
  ExperimentReport report;
  report.spec = spec;
  data::Dataset target = load_standardized_dataset(spec.target,
                                                   &report.warnings);
  report.target_name = target.name;

  for (std::size_t si = 0; si < spec.sources.size(); ++si) {
    data::Dataset source =
        load_standardized_dataset(spec.sources[si], &report.warnings);
    if (source.dim() != target.dim())
      throw Error("shape", "source '" + source.name + "' dimension " +
                               std::to_string(source.dim()) +
                               " does not match target dimension " +
                               std::to_string(target.dim()));
    audit_cross_corpus(source, target);

    for (int rep = 0; rep < spec.repetitions; ++rep) {
      neural::DenseNet net = pretrain_fnn(
          source,
          fnn_hyper(spec, spec.epochs,
                    derive_seed(spec.seed,
                                {si, static_cast<std::uint64_t>(rep),
                                 kPhaseTrain})));
      ConfusionMatrix cm = evaluate_all(target, [&](const Vector &x) {
        return fnn_classify(net, x);
      });
      push_run(&report, spec.method, source.name, 0, rep, cm);
      if (spec.pca_export && rep == 0)
        push_pca(&report, target, source.name, 0, 0, [&](const Vector &x) {
          return fnn_last_hidden(net, x);
        });
    }
  }
  return report;
}

namespace {

// One pre-trained source model, reused across the k sweep of a repetition.
struct Pretrained {
  std::optional<neural::DenseNet> fnn;
  std::optional<metric::SiameseModel> siamese;
};

Pretrained make_pretrained(const ExperimentSpec &spec,
                           const data::Dataset &source, std::uint64_t si,
                           std::uint64_t rep,
                           std::vector<std::string> *warnings) {
  Pretrained pre;
  if (spec.method == Method::kFnnFinetune) {
    pre.fnn = pretrain_fnn(
        source, fnn_hyper(spec, spec.epochs,
                          derive_seed(spec.seed, {si, rep, kPhaseTrain})));
  } else {
    pre.siamese = pretrain_siamese(spec, source, si, rep, warnings);
  }
  return pre;
}

}  // namespace

ExperimentReport run_few_shot(const ExperimentSpec &spec) {
  if (!is_few_shot(spec.method))
    throw Error("usage", "run_few_shot: spec selects a domain baseline");
  ExperimentReport report;
  report.spec = spec;
  data::Dataset target = load_standardized_dataset(spec.target,
                                                   &report.warnings);
  report.target_name = target.name;

  for (std::size_t si = 0; si < spec.sources.size(); ++si) {
    data::Dataset source =
        load_standardized_dataset(spec.sources[si], &report.warnings);
    if (source.dim() != target.dim())
      throw Error("shape", "source '" + source.name + "' dimension " +
                               std::to_string(source.dim()) +
                               " does not match target dimension " +
                               std::to_string(target.dim()));
    audit_cross_corpus(source, target);

    // Pre-training does not depend on k; cache one model per repetition.
    std::vector<std::optional<Pretrained>> cache(
        static_cast<std::size_t>(spec.repetitions));

    for (int k = spec.k_min; k <= spec.k_max; ++k) {
      for (int rep = 0; rep < spec.repetitions; ++rep) {
        const std::uint64_t ru = static_cast<std::uint64_t>(rep);
        const std::uint64_t ku = static_cast<std::uint64_t>(k);
        std::optional<Pretrained> &pre = cache[static_cast<std::size_t>(rep)];
        if (!pre)
          pre = make_pretrained(spec, source, si, ru, &report.warnings);

        data::FewShotSplit split = data::few_shot_split(
            target, k, derive_seed(spec.seed, {si, ru, ku, kPhaseSplit}));
        for (const std::string &w : split.warnings)
          report.warnings.push_back(
              run_context(spec.method, source.name, k, rep) + ": " + w);
        audit_few_shot(target, split);
        data::Dataset support = target.subset(split.support);

        const std::uint64_t adapt_seed =
            derive_seed(spec.seed, {si, ru, ku, kPhaseAdapt});
        const bool want_pca =
            spec.pca_export && rep == 0 && k == spec.k_max;

        switch (spec.method) {
          case Method::kFnnFinetune: {
            neural::DenseNet net = *pre->fnn;
            train_fnn(&net, support.samples,
                      fnn_hyper(spec, spec.finetune_epochs, adapt_seed));
            ConfusionMatrix cm =
                evaluate_indices(target, split.test, [&](const Vector &x) {
                  return fnn_classify(net, x);
                });
            push_run(&report, spec.method, source.name, k, rep, cm);
            if (want_pca)
              push_pca(&report, target, source.name, k, rep,
                       [&](const Vector &x) { return fnn_last_hidden(net, x); });
            break;
          }
          case Method::kMel: {
            metric::SiameseModel model = *pre->siamese;
            sampler::PairFormationPolicy policy;  // speaker-scoped
            sampler::AdaptivePairSource pairs(support, policy);
            metric::TrainResult tr = metric::train_mel(
                &model, &pairs,
                metric_hyper(spec, spec.finetune_epochs, adapt_seed));
            for (std::string &w : tr.warnings)
              report.warnings.push_back(std::move(w));
            metric::ClassCenters centers =
                metric::compute_centers(support.samples);
            auto embedded = metric::embed_centers(model, centers);
            ConfusionMatrix cm =
                evaluate_indices(target, split.test, [&](const Vector &x) {
                  return metric::classify_embedded(model, x, embedded);
                });
            push_run(&report, spec.method, source.name, k, rep, cm);
            if (want_pca)
              push_pca(&report, target, source.name, k, rep,
                       [&](const Vector &x) { return metric::embed(model, x); });
            break;
          }
          case Method::kMelS: {
            metric::SiameseModel model = *pre->siamese;
            Rng head_rng(derive_seed(spec.seed, {si, ru, ku, kPhaseHead}));
            model.attach_head(&head_rng);
            sampler::PairFormationPolicy policy;  // speaker-scoped
            sampler::AdaptivePairSource pairs(support, policy);
            metric::JointHyper jh;
            jh.base = metric_hyper(spec, spec.finetune_epochs, adapt_seed);
            jh.distance_weight = spec.distance_weight;
            metric::TrainResult tr =
                metric::train_mels(&model, support.samples, &pairs, jh);
            for (std::string &w : tr.warnings)
              report.warnings.push_back(std::move(w));
            ConfusionMatrix cm =
                evaluate_indices(target, split.test, [&](const Vector &x) {
                  return metric::mels_classify(model, x);
                });
            push_run(&report, spec.method, source.name, k, rep, cm);
            if (want_pca)
              push_pca(&report, target, source.name, k, rep,
                       [&](const Vector &x) { return mels_last_hidden(model, x); });
            break;
          }
          case Method::kMelSAspf: {
            metric::SiameseModel model = *pre->siamese;
            Rng head_rng(derive_seed(spec.seed, {si, ru, ku, kPhaseHead}));
            model.attach_head(&head_rng);
            sampler::AspfHyper ah;
            ah.iterations = spec.aspf_iterations;
            ah.epochs_per_iteration = spec.aspf_epochs_per_iteration;
            ah.lambda = spec.aspf_lambda;
            ah.joint.base = metric_hyper(spec, 0, adapt_seed);
            ah.joint.distance_weight = spec.distance_weight;
            sampler::AspfResult ar =
                sampler::train_mels_aspf(&model, support.samples, ah);
            for (std::string &w : ar.warnings)
              report.warnings.push_back(std::move(w));
            PiHistoryExport ph;
            ph.source = source.name;
            ph.k = k;
            ph.repetition = rep;
            ph.entries = std::move(ar.pi_history);
            report.pi_histories.push_back(std::move(ph));
            ConfusionMatrix cm =
                evaluate_indices(target, split.test, [&](const Vector &x) {
                  return metric::mels_classify(model, x);
                });
            push_run(&report, spec.method, source.name, k, rep, cm);
            if (want_pca)
              push_pca(&report, target, source.name, k, rep,
                       [&](const Vector &x) { return mels_last_hidden(model, x); });
            break;
          }
          case Method::kInDomain:
          case Method::kOutOfDomain:
            throw Error("usage", "run_few_shot: unexpected method");
        }
      }
    }
  }
  return report;
}

ExperimentReport run_experiment(const ExperimentSpec &spec) {
  validate_spec(spec);
  switch (spec.method) {
    case Method::kInDomain: return run_in_domain(spec);
    case Method::kOutOfDomain: return run_out_of_domain(spec);
    default: return run_few_shot(spec);
  }
}

}  // namespace harness
}  // namespace melfew
