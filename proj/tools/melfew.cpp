// tools/melfew.cpp
//
// melfew command line.  Subcommands:
//   extract  WAV manifest -> feature CSV
//   synth    synthetic-data config -> source/target feature CSVs
//   run      experiment spec -> report directory
//   report   report directory -> plot-ready summary tables
// Errors exit nonzero with one line: "melfew: error[<category>]: <message>".

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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "melfew/common/error.hpp"
#include "melfew/data/dataset.hpp"
#include "melfew/data/synth.hpp"
#include "melfew/data/types.hpp"
#include "melfew/features/audio.hpp"
#include "melfew/features/functionals.hpp"
#include "melfew/features/standardize.hpp"
#include "melfew/harness/experiment.hpp"
#include "melfew/harness/protocols.hpp"
#include "melfew/harness/report.hpp"

namespace {

using melfew::Error;

void warn(const std::string &message) {
  std::cerr << "melfew: warning: " << message << "\n";
}

std::string path_stem(const std::string &path) {
  return std::filesystem::path(path).stem().string();
}

int run_extract(const std::string &manifest_path, const std::string &output,
                std::string name, bool standardize) {
  std::vector<melfew::data::ManifestEntry> entries =
      melfew::data::parse_manifest(manifest_path);
  if (entries.empty())
    throw Error("input", "manifest '" + manifest_path + "' has no entries");

  melfew::data::Dataset ds;
  ds.role = entries.front().domain;
  ds.name = name.empty() ? path_stem(output) : std::move(name);

  std::set<std::string> seen;
  for (const melfew::data::ManifestEntry &entry : entries) {
    if (entry.domain != ds.role)
      throw Error("schema", "manifest '" + manifest_path +
                                "' mixes source and target rows");
    melfew::data::FeatureVector fv;
    fv.utterance_id = path_stem(entry.wav_path);
    if (!seen.insert(fv.utterance_id).second)
      throw Error("schema", "duplicate utterance id '" + fv.utterance_id +
                                "' (two WAV files share a stem)");
    fv.speaker_id = entry.speaker_id;
    fv.emotion = entry.emotion;
    fv.domain = entry.domain;
    melfew::features::AudioClip clip =
        melfew::features::read_wav(entry.wav_path);
    fv.values = melfew::features::compute_descriptor(clip);
    ds.samples.push_back(std::move(fv));
  }

  if (standardize) {
    std::vector<melfew::Vector> rows;
    rows.reserve(ds.samples.size());
    for (const auto &fv : ds.samples) rows.push_back(fv.values);
    melfew::features::Standardizer st =
        melfew::features::fit_standardizer(rows);
    for (auto &fv : ds.samples) st.apply_in_place(&fv.values);
    if (!st.degenerate_dims.empty())
      warn(std::to_string(st.degenerate_dims.size()) +
           " zero-variance dimensions passed through unscaled");
  }

  melfew::data::save_feature_csv(ds, output);
  std::cout << "wrote " << ds.samples.size() << " descriptors to " << output
            << "\n";
  return 0;
}

int run_synth(const std::string &config_path, const std::string &source_out,
              const std::string &target_out, std::uint64_t seed,
              bool seed_given) {
  melfew::data::SyntheticConfig cfg =
      melfew::data::load_synthetic_config(config_path);
  if (seed_given) cfg.seed = seed;
  auto [source, target] = melfew::data::synth_generate(cfg);
  source.name = path_stem(source_out);
  target.name = path_stem(target_out);
  melfew::data::save_feature_csv(source, source_out);
  melfew::data::save_feature_csv(target, target_out);
  std::cout << "wrote " << source.samples.size() << " source and "
            << target.samples.size() << " target samples\n";
  return 0;
}

int run_run(const std::string &spec_path, const std::string &out_dir) {
  melfew::harness::ExperimentSpec spec =
      melfew::harness::load_experiment_spec(spec_path);
  melfew::harness::ExperimentReport report =
      melfew::harness::run_experiment(spec);
  melfew::harness::write_report(report, out_dir);
  for (const std::string &w : report.warnings) warn(w);
  std::cout << "wrote " << report.runs.size() << " runs to " << out_dir
            << "\n";
  return 0;
}

int run_report(const std::string &in_dir, std::string out_dir) {
  if (out_dir.empty()) out_dir = in_dir;
  melfew::harness::summarize_report_dir(in_dir, out_dir);
  std::cout << "wrote summary tables to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"few-shot speech emotion transfer via siamese metric learning"};
  app.require_subcommand(1);

  std::string ext_manifest, ext_output, ext_name;
  bool ext_standardize = false;
  CLI::App *extract =
      app.add_subcommand("extract", "compute descriptors for a WAV manifest");
  extract->add_option("--manifest", ext_manifest, "manifest file")->required();
  extract->add_option("--output", ext_output, "feature CSV to write")
      ->required();
  extract->add_option("--name", ext_name,
                      "dataset name (default: output stem)");
  extract->add_flag("--standardize", ext_standardize,
                    "z-normalize descriptors with the dataset's own stats");

  std::string synth_config, synth_source_out, synth_target_out;
  std::uint64_t synth_seed = 0;
  CLI::App *synth =
      app.add_subcommand("synth", "generate synthetic source/target corpora");
  synth->add_option("--config", synth_config, "generator config")->required();
  synth->add_option("--source-out", synth_source_out, "source CSV")
      ->required();
  synth->add_option("--target-out", synth_target_out, "target CSV")
      ->required();
  CLI::Option *seed_opt =
      synth->add_option("--seed", synth_seed, "override the config seed");

  std::string run_spec, run_out;
  CLI::App *run = app.add_subcommand("run", "run an experiment spec");
  run->add_option("--spec", run_spec, "experiment spec file")->required();
  run->add_option("--out", run_out, "report directory")->required();

  std::string report_in, report_out;
  CLI::App *report =
      app.add_subcommand("report", "summarize a report directory");
  report->add_option("--in", report_in, "report directory")->required();
  report->add_option("--out", report_out,
                     "output directory (default: the report directory)");

  try {
    app.parse(argc, argv);
    if (extract->parsed())
      return run_extract(ext_manifest, ext_output, ext_name, ext_standardize);
    if (synth->parsed())
      return run_synth(synth_config, synth_source_out, synth_target_out,
                       synth_seed, seed_opt->count() > 0);
    if (run->parsed()) return run_run(run_spec, run_out);
    if (report->parsed()) return run_report(report_in, report_out);
    throw Error("usage", "no subcommand selected");
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "melfew: error[usage]: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "melfew: error[" << e.category() << "]: " << e.what()
              << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "melfew: error[internal]: " << e.what() << "\n";
    return 1;
  }
}
