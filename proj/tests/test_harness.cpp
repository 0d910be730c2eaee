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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "melfew/common/error.hpp"
#include "melfew/data/dataset.hpp"
#include "melfew/data/splits.hpp"
#include "melfew/data/synth.hpp"
#include "melfew/harness/experiment.hpp"
#include "melfew/harness/metrics.hpp"
#include "melfew/harness/pca.hpp"
#include "melfew/harness/protocols.hpp"
#include "melfew/harness/report.hpp"
#include "test_util.hpp"

using namespace melfew;
using namespace melfew::harness;
using melfew::testutil::make_fv;
using melfew::testutil::TempDir;

namespace {

ConfusionMatrix cm_from(const std::vector<std::vector<std::uint64_t>> &rows) {
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      cm.counts[i][j] = rows[i][j];
  return cm;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Source/target CSV pair on disk for protocol tests; tiny but separable.
struct DiskCorpora {
  TempDir tmp;
  std::string source_path;
  std::string target_path;

  explicit DiskCorpora(std::uint64_t seed, double shift = 0.4) {
    data::SyntheticConfig cfg;
    cfg.dims = 5;
    cfg.seed = seed;
    cfg.source_speakers = 3;
    cfg.target_speakers = 2;
    cfg.clips_per_speaker_per_emotion = 4;
    cfg.cluster_mean_scale = 4.0;
    cfg.cluster_std = 0.6;
    cfg.target_shift = shift;
    auto [src, tgt] = data::synth_generate(cfg);
    source_path = tmp.file("source.csv");
    target_path = tmp.file("target.csv");
    data::save_feature_csv(src, source_path);
    data::save_feature_csv(tgt, target_path);
  }
};

ExperimentSpec fast_spec(Method method, const DiskCorpora &corpora) {
  ExperimentSpec spec;
  spec.method = method;
  spec.sources = {corpora.source_path};
  spec.target = corpora.target_path;
  spec.k_min = 1;
  spec.k_max = 2;
  spec.repetitions = 2;
  spec.seed = 11;
  spec.epochs = 6;
  spec.finetune_epochs = 4;
  spec.learning_rate = 0.005;
  spec.aspf_iterations = 3;
  spec.aspf_epochs_per_iteration = 1;
  return spec;
}

}  // namespace

TEST_CASE("uar matches the hand-computed recalls") {
  // Recalls 1.0, 0.5, 0.0 average to exactly 0.5.
  ConfusionMatrix cm = cm_from({{2, 0, 0}, {1, 1, 0}, {2, 0, 0}});
  UarResult r = uar(cm);
  CHECK(r.value == 0.5);
  CHECK(r.warnings.empty());

  ConfusionMatrix perfect = cm_from({{3, 0, 0}, {0, 4, 0}, {0, 0, 5}});
  CHECK(uar(perfect).value == 1.0);
}

TEST_CASE("uar excludes empty classes with a warning") {
  ConfusionMatrix cm = cm_from({{2, 0, 0}, {1, 1, 0}, {0, 0, 0}});
  UarResult r = uar(cm);
  CHECK(r.value == 0.75);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("sadness") != std::string::npos);
}

TEST_CASE("uar on an empty matrix is a metric error") {
  ConfusionMatrix cm;
  try {
    uar(cm);
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "metric");
  }
}

TEST_CASE("a uniform random classifier scores near one third") {
  Rng rng(2718);
  ConfusionMatrix cm;
  for (int i = 0; i < 100000; ++i) {
    auto truth = static_cast<data::Emotion>(i % 3);
    auto pred = static_cast<data::Emotion>(rng.uniform_index(3));
    cm.add(truth, pred);
  }
  CHECK(std::fabs(uar(cm).value - 1.0 / 3.0) < 0.02);
}

TEST_CASE("summarize_runs reports mean, spread, and pooled UAR") {
  RunRecord r1;
  r1.method = Method::kMelS;
  r1.source = "src";
  r1.k = 2;
  r1.repetition = 0;
  r1.confusion = cm_from({{2, 0, 0}, {1, 1, 0}, {0, 0, 0}});
  r1.uar = uar(r1.confusion).value;  // 0.75

  RunRecord r2 = r1;
  r2.repetition = 1;
  r2.confusion = cm_from({{0, 6, 0}, {0, 2, 0}, {0, 0, 0}});
  r2.uar = uar(r2.confusion).value;  // 0.5

  auto rows = summarize_runs({r1, r2});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].repetitions == 2);
  CHECK(rows[0].mean_uar == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(rows[0].std_uar == doctest::Approx(0.125).epsilon(1e-12));
  // Pooled counts: anger 2/8 = 0.25, happiness 3/4 = 0.75.
  CHECK(rows[0].pooled_uar == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rows[0].pooled_uar != rows[0].mean_uar);
}

TEST_CASE("summarize_runs groups by method, source, and k in order") {
  RunRecord a;
  a.method = Method::kMel;
  a.source = "s1";
  a.k = 1;
  a.confusion = cm_from({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  a.uar = 1.0;
  RunRecord b = a;
  b.k = 2;
  RunRecord c = a;
  c.source = "s2";
  auto rows = summarize_runs({a, b, c, a});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].source == "s1");
  CHECK(rows[0].k == 1);
  CHECK(rows[0].repetitions == 2);
  CHECK(rows[1].k == 2);
  CHECK(rows[2].source == "s2");
}

TEST_CASE("method names round-trip and classify as few-shot or not") {
  for (Method m : {Method::kInDomain, Method::kOutOfDomain,
                   Method::kFnnFinetune, Method::kMel, Method::kMelS,
                   Method::kMelSAspf}) {
    CHECK(parse_method(to_string(m)) == m);
  }
  CHECK_FALSE(is_few_shot(Method::kInDomain));
  CHECK_FALSE(is_few_shot(Method::kOutOfDomain));
  CHECK(is_few_shot(Method::kFnnFinetune));
  CHECK(is_few_shot(Method::kMelSAspf));
  CHECK_THROWS_AS(parse_method("bogus"), Error);
}

TEST_CASE("experiment specs parse with defaults and validate ranges") {
  ExperimentSpec spec = parse_experiment_spec(
      "method = mel_s\n"
      "source = a.csv\n"
      "source = b.csv\n"
      "target = t.csv\n"
      "margin = inf\n"
      "objective = distance\n",
      "spec.kv");
  CHECK(spec.method == Method::kMelS);
  REQUIRE(spec.sources.size() == 2);
  CHECK(spec.sources[1] == "b.csv");
  CHECK(spec.target == "t.csv");
  CHECK(std::isinf(spec.margin));
  CHECK(spec.objective == metric::PairObjective::kDistance);
  CHECK(spec.k_min == 1);
  CHECK(spec.k_max == 10);
  CHECK(spec.repetitions == 10);
  CHECK(spec.learning_rate == 0.0005);
  CHECK(spec.epochs == 250);
  CHECK(spec.batch_size == 32);
  CHECK(spec.kappa == 1.0);
  CHECK(spec.distance_weight == 1.0);
  CHECK(spec.aspf_iterations == 25);
  CHECK(spec.aspf_epochs_per_iteration == 10);
  CHECK(spec.aspf_lambda == 0.1);
}

TEST_CASE("experiment spec rejects unknown keys and bad ranges") {
  const std::string base =
      "method = mel\nsource = a.csv\ntarget = t.csv\n";
  try {
    parse_experiment_spec(base + "typo_key = 3\n", "s.kv");
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "config");
    CHECK(std::string(e.what()).find("typo_key") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_experiment_spec(base + "k_min = 5\nk_max = 2\n", "s"),
                  Error);
  CHECK_THROWS_AS(parse_experiment_spec(base + "repetitions = 0\n", "s"),
                  Error);
  CHECK_THROWS_AS(parse_experiment_spec(base + "learning_rate = 0\n", "s"),
                  Error);
  CHECK_THROWS_AS(parse_experiment_spec(base + "kappa = -1\n", "s"), Error);
  CHECK_THROWS_AS(parse_experiment_spec(base + "margin = 0\n", "s"), Error);
  CHECK_THROWS_AS(parse_experiment_spec(base + "k_max = 11\n", "s"), Error);
  // Few-shot methods need a source; in_domain needs none.
  CHECK_THROWS_AS(parse_experiment_spec("method = mel\ntarget = t.csv\n", "s"),
                  Error);
  ExperimentSpec indomain =
      parse_experiment_spec("method = in_domain\ntarget = t.csv\n", "s");
  CHECK(indomain.sources.empty());
}

TEST_CASE("classify_scores takes the argmax with ties to smaller classes") {
  CHECK(classify_scores({0.2, 0.9, 0.1}) == data::Emotion::kHappiness);
  CHECK(classify_scores({0.5, 0.5, 0.1}) == data::Emotion::kAnger);
  CHECK(classify_scores({0.3, 0.4, 0.4}) == data::Emotion::kHappiness);
  CHECK_THROWS_AS(classify_scores({0.5, 0.5}), Error);
}

TEST_CASE("make_fnn builds the documented stack") {
  Rng rng(6);
  neural::DenseNet net = make_fnn(7, &rng);
  REQUIRE(net.num_layers() == 4);
  CHECK(net.input_dim() == 7);
  CHECK(net.layers()[0].out_dim == 32);
  CHECK(net.layers()[1].out_dim == 16);
  CHECK(net.layers()[2].out_dim == 16);
  CHECK(net.layers()[3].out_dim == 3);
  CHECK(net.layers()[2].activation == neural::Activation::kRectifier);
  CHECK(net.layers()[3].activation == neural::Activation::kSigmoid);
}

TEST_CASE("train_fnn learns a separable toy problem deterministically") {
  data::Dataset ds = testutil::make_cluster_dataset(
      "toy", data::DomainRole::kSource, 2, 6, testutil::axis_means(4, 4.0),
      0.4, 88);
  auto run = [&](std::uint64_t seed) {
    Rng rng(55);
    neural::DenseNet net = make_fnn(4, &rng);
    FnnHyper hyper;
    hyper.epochs = 40;
    hyper.lr = 0.01;
    hyper.seed = seed;
    auto losses = train_fnn(&net, ds.samples, hyper);
    return std::make_pair(net, losses);
  };
  auto [net1, losses1] = run(9);
  auto [net2, losses2] = run(9);
  CHECK(testutil::nets_equal(net1, net2));
  CHECK(losses1 == losses2);
  REQUIRE(losses1.size() == 40);
  CHECK(losses1.back() < losses1.front());

  std::size_t correct = 0;
  for (const auto &fv : ds.samples)
    if (fnn_classify(net1, fv.values) == fv.emotion) ++correct;
  CHECK(double(correct) / ds.size() > 0.9);

  // Zero epochs: untouched weights, no loss entries.
  Rng rng(55);
  neural::DenseNet untouched = make_fnn(4, &rng);
  neural::DenseNet copy = untouched;
  FnnHyper none;
  none.epochs = 0;
  CHECK(train_fnn(&untouched, ds.samples, none).empty());
  CHECK(testutil::nets_equal(untouched, copy));
}

TEST_CASE("fnn_finetune with an empty support equals the pretrained net") {
  data::Dataset source = testutil::make_cluster_dataset(
      "src", data::DomainRole::kSource, 2, 4, testutil::axis_means(4, 3.0),
      0.5, 21);
  FinetuneHyper hyper;
  hyper.pretrain.epochs = 5;
  hyper.pretrain.seed = 31;
  hyper.finetune_epochs = 50;
  hyper.finetune_seed = 77;
  neural::DenseNet with_empty = fnn_finetune(source, {}, hyper);

  // The pretrained reference: same init stream, same training stream.
  neural::DenseNet reference = fnn_finetune(source, {}, hyper);
  CHECK(testutil::nets_equal(with_empty, reference));

  // A nonempty support changes the weights.
  std::vector<data::FeatureVector> support(source.samples.begin(),
                                           source.samples.begin() + 6);
  neural::DenseNet adapted = fnn_finetune(source, support, hyper);
  CHECK_FALSE(testutil::nets_equal(with_empty, adapted));
}

TEST_CASE("audits catch constructed leakage") {
  data::Dataset ds = testutil::make_cluster_dataset(
      "t", data::DomainRole::kTarget, 3, 3, testutil::axis_means(3, 2.0), 0.5,
      61);

  SUBCASE("index overlap") {
    try {
      audit_disjoint_ids(ds, {0, 1, 2}, {2, 3}, "unit");
      FAIL("expected Error");
    } catch (const Error &e) {
      CHECK(e.category() == "protocol");
      CHECK(std::string(e.what()).find(ds.samples[2].utterance_id) !=
            std::string::npos);
    }
    audit_disjoint_ids(ds, {0, 1}, {2, 3}, "unit");  // clean split passes
  }

  SUBCASE("duplicate ids across index lists") {
    data::Dataset dup = ds;
    dup.samples[4].utterance_id = dup.samples[0].utterance_id;
    CHECK_THROWS_AS(audit_disjoint_ids(dup, {0}, {4}, "unit"), Error);
  }

  SUBCASE("cross corpus id collision") {
    data::Dataset src = ds;
    src.role = data::DomainRole::kSource;
    data::Dataset tgt = ds.subset({0, 1, 2});
    CHECK_THROWS_AS(audit_cross_corpus(src, tgt), Error);

    data::Dataset clean = ds.subset({0, 1, 2});
    for (auto &fv : clean.samples) fv.utterance_id += "_tgt";
    audit_cross_corpus(src, clean);
  }

  SUBCASE("tampered loso folds") {
    auto folds = data::loso_folds(ds);
    audit_loso(ds, folds);  // honest folds pass
    folds[0].train.push_back(folds[0].test[0]);
    CHECK_THROWS_AS(audit_loso(ds, folds), Error);
  }

  SUBCASE("tampered few-shot split") {
    data::FewShotSplit split = data::few_shot_split(ds, 1, 5);
    audit_few_shot(ds, split);  // honest split passes
    split.test.push_back(split.support[0]);
    CHECK_THROWS_AS(audit_few_shot(ds, split), Error);
  }
}

TEST_CASE("load_standardized_dataset centers every dimension") {
  TempDir tmp;
  data::Dataset ds = testutil::make_cluster_dataset(
      "t", data::DomainRole::kTarget, 2, 5, testutil::axis_means(4, 3.0), 1.0,
      71);
  for (auto &fv : ds.samples) fv.values.push_back(7.5);  // constant dim
  const std::string path = tmp.file("t.csv");
  data::save_feature_csv(ds, path);
  std::vector<std::string> warnings;
  data::Dataset std_ds = load_standardized_dataset(path, &warnings);
  REQUIRE(std_ds.size() == ds.size());
  REQUIRE(std_ds.dim() == 5);
  for (std::size_t d = 0; d < std_ds.dim(); ++d) {
    double mean = 0.0;
    for (const auto &fv : std_ds.samples) mean += fv.values[d];
    mean /= std_ds.size();
    CHECK(std::fabs(mean) < 1e-9);
  }
  CHECK(!warnings.empty());  // the constant dimension is reported
}

TEST_CASE("pca finds axis-aligned structure with the sign convention") {
  // Points on the x axis: axis1 is e1, axis2 has no variance left.
  std::vector<Vector> rows{{-2.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
  Pca2 p = fit_pca2(rows);
  CHECK(p.var1 == doctest::Approx(2.5).epsilon(1e-9));
  CHECK(p.axis1[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(p.axis1[1] == doctest::Approx(0.0).scale(1.0));
  CHECK(p.var2 == doctest::Approx(0.0).scale(1.0));
  auto proj = p.project({3.0, 0.0});
  CHECK(proj[0] == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(proj[1] == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("pca orients the dominant loading positive") {
  // A line along (2, 1): the first component carries the largest loading
  // and must come out positive regardless of the data's sign.
  std::vector<Vector> rows{{2.0, 1.0}, {-2.0, -1.0}, {4.0, 2.0}, {-4.0, -2.0}};
  Pca2 p = fit_pca2(rows);
  CHECK(p.axis1[0] == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-9));
  CHECK(p.axis1[1] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-9));
  CHECK(p.var1 == doctest::Approx(12.5).epsilon(1e-9));
}

TEST_CASE("pca projections reproduce the eigenvalues as variances") {
  Rng rng(81);
  std::vector<Vector> rows(60, Vector(5));
  for (auto &r : rows)
    for (std::size_t d = 0; d < 5; ++d) r[d] = (d + 1.0) * rng.normal();
  Pca2 p = fit_pca2(rows);
  CHECK(p.var1 >= p.var2);
  CHECK(p.var2 >= 0.0);
  double m1 = 0.0, m2 = 0.0;
  std::vector<std::array<double, 2>> proj;
  for (const auto &r : rows) {
    proj.push_back(p.project(r));
    m1 += proj.back()[0];
    m2 += proj.back()[1];
  }
  m1 /= rows.size();
  m2 /= rows.size();
  double v1 = 0.0, v2 = 0.0;
  for (const auto &pr : proj) {
    v1 += (pr[0] - m1) * (pr[0] - m1);
    v2 += (pr[1] - m2) * (pr[1] - m2);
  }
  v1 /= rows.size();
  v2 /= rows.size();
  CHECK(v1 == doctest::Approx(p.var1).epsilon(1e-8));
  CHECK(v2 == doctest::Approx(p.var2).epsilon(1e-8));
}

TEST_CASE("pca needs at least two consistent rows") {
  try {
    fit_pca2({{1.0, 2.0}});
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "export");
  }
  CHECK_THROWS_AS((fit_pca2({{1.0, 2.0}, {1.0}})), Error);
}

TEST_CASE("write_report and read_runs_csv round-trip the counts") {
  TempDir tmp;
  ExperimentReport report;
  report.spec.method = Method::kMelSAspf;
  report.spec.sources = {"src.csv"};
  report.spec.target = "tgt.csv";
  report.target_name = "tgt";

  RunRecord r;
  r.method = Method::kMelSAspf;
  r.source = "src";
  r.k = 2;
  r.repetition = 0;
  r.confusion = cm_from({{3, 1, 0}, {0, 4, 0}, {1, 0, 3}});
  r.uar = uar(r.confusion).value;
  report.runs.push_back(r);

  PiHistoryExport pi;
  pi.source = "src";
  pi.k = 2;
  pi.repetition = 0;
  pi.entries = {{1, "u1", 1.0}, {1, "u2", 1.25}, {2, "u1", 1.5}};
  report.pi_histories.push_back(pi);

  PcaExport pca;
  pca.source = "src";
  pca.k = 2;
  pca.repetition = 0;
  pca.rows = {{"u1", data::Emotion::kAnger, 0.5, -0.25},
              {"u2", data::Emotion::kSadness, -1.0, 2.0}};
  report.pca_exports.push_back(pca);
  report.warnings.push_back("example warning");

  const std::string dir = tmp.file("report");
  write_report(report, dir);

  CHECK(std::filesystem::exists(dir + "/runs.csv"));
  CHECK(std::filesystem::exists(dir + "/summary.csv"));
  CHECK(std::filesystem::exists(dir + "/artifacts.csv"));
  CHECK(std::filesystem::exists(dir + "/warnings.txt"));

  auto runs = read_runs_csv(dir + "/runs.csv");
  REQUIRE(runs.size() == 1);
  CHECK(runs[0].method == Method::kMelSAspf);
  CHECK(runs[0].source == "src");
  CHECK(runs[0].k == 2);
  CHECK(runs[0].confusion.counts == r.confusion.counts);
  CHECK(runs[0].uar == doctest::Approx(r.uar).epsilon(1e-12));

  // The artifact index names the side files, which exist on disk.
  std::string artifacts = read_file(dir + "/artifacts.csv");
  CHECK(artifacts.find("pi_history") != std::string::npos);
  CHECK(artifacts.find("pca") != std::string::npos);

  const std::string summary_dir = tmp.file("derived");
  summarize_report_dir(dir, summary_dir);
  CHECK(std::filesystem::exists(summary_dir + "/summary_table.csv"));
  CHECK(std::filesystem::exists(summary_dir + "/fig3_uar_vs_k.csv"));
  CHECK(std::filesystem::exists(summary_dir + "/fig4_pi_histogram.csv"));
  CHECK(std::filesystem::exists(summary_dir + "/fig5_pca.csv"));

  // The histogram covers [1, max pi] in 20 bins and counts every sample.
  std::string fig4 = read_file(summary_dir + "/fig4_pi_histogram.csv");
  CHECK(fig4.find("source,k,repetition,iteration,bin_lo,bin_hi,count") == 0);
}

TEST_CASE("read_runs_csv validates the schema") {
  TempDir tmp;
  const std::string path = tmp.file("runs.csv");
  std::ofstream out(path);
  out << "method,source,k,repetition,uar,n_test,"
         "c_aa,c_ah,c_as,c_ha,c_hh,c_hs,c_sa,c_sh,c_ss\n";
  // n_test disagrees with the confusion counts.
  out << "mel_s,src,2,0,0.5,99,1,0,0,0,1,0,0,0,1\n";
  out.close();
  try {
    read_runs_csv(path);
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "schema");
  }
}

TEST_CASE("run_experiment rejects specs whose datasets disagree") {
  DiskCorpora corpora(301);
  ExperimentSpec spec = fast_spec(Method::kMel, corpora);
  // Target with a different dimensionality.
  data::SyntheticConfig other;
  other.dims = 7;
  other.seed = 13;
  other.source_speakers = 2;
  other.target_speakers = 2;
  other.clips_per_speaker_per_emotion = 3;
  auto [src2, tgt2] = data::synth_generate(other);
  const std::string other_target = corpora.tmp.file("other_target.csv");
  data::save_feature_csv(tgt2, other_target);
  spec.target = other_target;
  try {
    run_experiment(spec);
    FAIL("expected Error");
  } catch (const Error &e) {
    CHECK(e.category() == "shape");
  }
}

TEST_CASE("in-domain runs one record per repetition over loso folds") {
  DiskCorpora corpora(302);
  ExperimentSpec spec = fast_spec(Method::kInDomain, corpora);
  spec.sources.clear();
  spec.repetitions = 2;
  spec.epochs = 3;
  ExperimentReport report = run_experiment(spec);
  REQUIRE(report.runs.size() == 2);
  for (const auto &run : report.runs) {
    CHECK(run.method == Method::kInDomain);
    CHECK(run.source == "-");
    CHECK(run.k == 0);
    // Every target sample is scored exactly once across the folds.
    CHECK(run.confusion.total() == 2 * 3 * 4);
  }
}

TEST_CASE("out-of-domain scores the whole target corpus") {
  DiskCorpora corpora(303);
  ExperimentSpec spec = fast_spec(Method::kOutOfDomain, corpora);
  spec.repetitions = 2;
  spec.epochs = 3;
  ExperimentReport report = run_experiment(spec);
  REQUIRE(report.runs.size() == 2);
  for (const auto &run : report.runs) {
    CHECK(run.k == 0);
    CHECK(run.source == "source");
    CHECK(run.confusion.total() == 2 * 3 * 4);
  }
}

TEST_CASE("few-shot methods sweep k and never score support samples") {
  DiskCorpora corpora(304);
  for (Method m : {Method::kFnnFinetune, Method::kMel, Method::kMelS}) {
    ExperimentSpec spec = fast_spec(m, corpora);
    ExperimentReport report = run_experiment(spec);
    // k in {1, 2} x 2 repetitions.
    REQUIRE(report.runs.size() == 4);
    const std::size_t target_total = 2 * 3 * 4;
    for (const auto &run : report.runs) {
      CHECK((run.k == 1 || run.k == 2));
      // Support of k per (speaker, emotion) cell is withheld from scoring.
      CHECK(run.confusion.total() ==
            target_total - std::size_t(run.k) * 2 * 3);
    }
  }
}

TEST_CASE("mel_s_aspf emits one pi history per run") {
  DiskCorpora corpora(305);
  ExperimentSpec spec = fast_spec(Method::kMelSAspf, corpora);
  ExperimentReport report = run_experiment(spec);
  REQUIRE(report.runs.size() == 4);
  REQUIRE(report.pi_histories.size() == 4);
  for (const auto &h : report.pi_histories) {
    CHECK(!h.entries.empty());
    // iterations x support size: k per cell, 2 speakers x 3 emotions.
    const std::size_t support = std::size_t(h.k) * 2 * 3;
    CHECK(h.entries.size() == std::size_t(spec.aspf_iterations) * support);
  }
}

TEST_CASE("pca export lands on the requested runs") {
  DiskCorpora corpora(306);
  ExperimentSpec spec = fast_spec(Method::kMelS, corpora);
  spec.pca_export = true;
  ExperimentReport report = run_experiment(spec);
  REQUIRE(report.pca_exports.size() == 1);
  CHECK(report.pca_exports[0].k == spec.k_max);
  CHECK(report.pca_exports[0].repetition == 0);
  // The projection covers the whole target corpus.
  CHECK(report.pca_exports[0].rows.size() == 2 * 3 * 4);

  ExperimentSpec id_spec = fast_spec(Method::kInDomain, corpora);
  id_spec.sources.clear();
  id_spec.pca_export = true;
  id_spec.repetitions = 1;
  id_spec.epochs = 2;
  ExperimentReport id_report = run_experiment(id_spec);
  REQUIRE(id_report.pca_exports.size() == 1);
  CHECK(id_report.pca_exports[0].source == "-");
  CHECK(id_report.pca_exports[0].rows.size() == 2 * 3 * 4);
}

TEST_CASE("identical seeds reproduce a byte-identical report") {
  DiskCorpora corpora(307);
  ExperimentSpec spec = fast_spec(Method::kMelSAspf, corpora);
  spec.pca_export = true;

  ExperimentReport r1 = run_experiment(spec);
  ExperimentReport r2 = run_experiment(spec);
  const std::string d1 = corpora.tmp.file("rep1");
  const std::string d2 = corpora.tmp.file("rep2");
  write_report(r1, d1);
  write_report(r2, d2);
  for (const auto &entry : std::filesystem::directory_iterator(d1)) {
    const std::string name = entry.path().filename().string();
    CAPTURE(name);
    CHECK(read_file(d1 + "/" + name) == read_file(d2 + "/" + name));
  }

  // A different seed moves the numbers.
  spec.seed += 1;
  ExperimentReport r3 = run_experiment(spec);
  write_report(r3, corpora.tmp.file("rep3"));
  CHECK(read_file(d1 + "/runs.csv") !=
        read_file(corpora.tmp.file("rep3") + "/runs.csv"));
}
