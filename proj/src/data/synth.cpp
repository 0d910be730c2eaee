// src/data/synth.cpp

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

#include "melfew/data/synth.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "melfew/common/error.hpp"
#include "melfew/common/kv.hpp"
#include "melfew/common/rng.hpp"

namespace melfew {
namespace data {

namespace {

Vector random_unit(Rng *rng, std::size_t dims) {
  Vector v(dims);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (double &x : v) {
      x = rng->normal();
      norm += x * x;
    }
    norm = std::sqrt(norm);
  } while (norm < 1e-12);
  for (double &x : v) x /= norm;
  return v;
}

// Disjoint coordinate pairs with a common rotation angle; applied to every
// sample of the target domain.
struct PlaneRotation {
  std::vector<std::pair<std::size_t, std::size_t>> planes;
  double c = 1.0, s = 0.0;

  void apply(Vector *v) const {
    for (auto [i, j] : planes) {
      double a = (*v)[i], b = (*v)[j];
      (*v)[i] = c * a - s * b;
      (*v)[j] = s * a + c * b;
    }
  }
};

std::string speaker_name(const char *prefix, std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%02zu", prefix, i);
  return buf;
}

std::string utterance_name(const std::string &speaker, Emotion e,
                           std::size_t k) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03zu", k);
  return speaker + "_" + to_string(e) + "_" + buf;
}

}  // namespace

SyntheticConfig load_synthetic_config(const std::string &path) {
  KvFile kv = KvFile::parse_file(path);
  static const std::set<std::string> known = {
      "dims",          "seed",
      "source_speakers",
      "target_speakers",
      "clips_per_speaker_per_emotion",
      "cluster_mean_scale",
      "cluster_std",   "target_shift",
      "target_rotation",
      "speaker_offset_std",
      "mean_anger",    "mean_happiness",
      "mean_sadness",  "cov_anger",
      "cov_happiness", "cov_sadness",
      "target_shift_vector",
  };
  for (const auto &entry : kv.entries())
    if (known.find(entry.key) == known.end())
      throw Error("config", kv.origin() + ": unknown synthetic key '" +
                                entry.key + "'");
  SyntheticConfig cfg;
  cfg.dims = static_cast<std::size_t>(kv.get_uint_or("dims", cfg.dims));
  cfg.seed = kv.get_uint_or("seed", cfg.seed);
  cfg.source_speakers =
      static_cast<std::size_t>(kv.get_uint_or("source_speakers", cfg.source_speakers));
  cfg.target_speakers =
      static_cast<std::size_t>(kv.get_uint_or("target_speakers", cfg.target_speakers));
  cfg.clips_per_speaker_per_emotion = static_cast<std::size_t>(
      kv.get_uint_or("clips_per_speaker_per_emotion",
                     cfg.clips_per_speaker_per_emotion));
  cfg.cluster_mean_scale =
      kv.get_double_or("cluster_mean_scale", cfg.cluster_mean_scale);
  cfg.cluster_std = kv.get_double_or("cluster_std", cfg.cluster_std);
  cfg.target_shift = kv.get_double_or("target_shift", cfg.target_shift);
  cfg.target_rotation = kv.get_double_or("target_rotation", cfg.target_rotation);
  cfg.speaker_offset_std =
      kv.get_double_or("speaker_offset_std", cfg.speaker_offset_std);

  bool any_mean = false, all_means = true;
  std::array<Vector, kNumEmotions> means;
  for (Emotion e : kAllEmotions) {
    std::string key = std::string("mean_") + to_string(e);
    if (kv.has(key)) {
      means[static_cast<std::size_t>(e)] = kv.get_doubles(key);
      any_mean = true;
    } else {
      all_means = false;
    }
  }
  if (any_mean) {
    if (!all_means)
      throw Error("config", path + ": give mean_<emotion> for all three "
                            "emotions or none");
    cfg.means = means;
  }

  bool any_cov = false, all_covs = true;
  std::array<Vector, kNumEmotions> covs;
  for (Emotion e : kAllEmotions) {
    std::string key = std::string("cov_") + to_string(e);
    if (kv.has(key)) {
      covs[static_cast<std::size_t>(e)] = kv.get_doubles(key);
      any_cov = true;
    } else {
      all_covs = false;
    }
  }
  if (any_cov) {
    if (!all_covs)
      throw Error("config", path + ": give cov_<emotion> for all three "
                            "emotions or none");
    cfg.cov_diag = covs;
  }

  if (kv.has("target_shift_vector"))
    cfg.target_shift_vector = kv.get_doubles("target_shift_vector");
  return cfg;
}

std::pair<Dataset, Dataset> synth_generate(const SyntheticConfig &cfg) {
  if (cfg.dims == 0) throw Error("config", "synth: dims must be positive");
  if (cfg.target_speakers < 2)
    throw Error("config", "synth: need at least 2 target speakers");
  if (cfg.source_speakers < 1)
    throw Error("config", "synth: need at least 1 source speaker");
  if (cfg.clips_per_speaker_per_emotion < 1)
    throw Error("config", "synth: need at least 1 clip per speaker/emotion");
  if (cfg.cluster_std < 0.0)
    throw Error("config", "synth: negative cluster_std is not a covariance");
  if (cfg.speaker_offset_std < 0.0)
    throw Error("config", "synth: negative speaker_offset_std");

  std::array<Vector, kNumEmotions> cov_std;
  for (Emotion e : kAllEmotions) {
    std::size_t c = static_cast<std::size_t>(e);
    if (cfg.cov_diag) {
      const Vector &diag = (*cfg.cov_diag)[c];
      if (diag.size() != cfg.dims)
        throw Error("config", "synth: cov_diag dim mismatch");
      cov_std[c].resize(cfg.dims);
      for (std::size_t d = 0; d < cfg.dims; ++d) {
        if (diag[d] < 0.0)
          throw Error("config",
                      "synth: covariance has a negative diagonal entry "
                      "(not positive semi-definite)");
        cov_std[c][d] = std::sqrt(diag[d]);
      }
    } else {
      cov_std[c].assign(cfg.dims, cfg.cluster_std);
    }
  }

  Rng rng(cfg.seed);

  // 1. Cluster means.
  std::array<Vector, kNumEmotions> means;
  if (cfg.means) {
    for (Emotion e : kAllEmotions) {
      std::size_t c = static_cast<std::size_t>(e);
      if ((*cfg.means)[c].size() != cfg.dims)
        throw Error("config", "synth: mean dim mismatch");
      means[c] = (*cfg.means)[c];
    }
  } else {
    for (Emotion e : kAllEmotions) {
      std::size_t c = static_cast<std::size_t>(e);
      means[c] = random_unit(&rng, cfg.dims);
      for (double &x : means[c]) x *= cfg.cluster_mean_scale;
    }
  }

  // 2. Domain shift.
  Vector shift(cfg.dims, 0.0);
  if (cfg.target_shift_vector) {
    if (cfg.target_shift_vector->size() != cfg.dims)
      throw Error("config", "synth: target_shift_vector dim mismatch");
    shift = *cfg.target_shift_vector;
  } else if (cfg.target_shift != 0.0) {
    shift = random_unit(&rng, cfg.dims);
    for (double &x : shift) x *= cfg.target_shift;
  }

  // 3. Rotation planes over a random pairing of all coordinates.
  PlaneRotation rot;
  if (cfg.target_rotation != 0.0 && cfg.dims >= 2) {
    std::vector<std::size_t> perm(cfg.dims);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(&perm);
    for (std::size_t i = 0; i + 1 < cfg.dims; i += 2)
      rot.planes.emplace_back(perm[i], perm[i + 1]);
    rot.c = std::cos(cfg.target_rotation);
    rot.s = std::sin(cfg.target_rotation);
  }

  // 4. Speaker offsets.
  auto draw_offset = [&]() {
    Vector v(cfg.dims);
    for (double &x : v) x = rng.normal() * cfg.speaker_offset_std;
    return v;
  };
  std::vector<Vector> src_offsets, tgt_offsets;
  for (std::size_t s = 0; s < cfg.source_speakers; ++s)
    src_offsets.push_back(draw_offset());
  for (std::size_t s = 0; s < cfg.target_speakers; ++s)
    tgt_offsets.push_back(draw_offset());

  // 5. Samples.  Source first, then target, in a fixed nesting order.
  Dataset source, target;
  source.name = "synthetic_source";
  source.role = DomainRole::kSource;
  target.name = "synthetic_target";
  target.role = DomainRole::kTarget;

  auto draw_dev = [&](std::size_t c) {
    Vector v(cfg.dims);
    for (std::size_t d = 0; d < cfg.dims; ++d)
      v[d] = rng.normal() * cov_std[c][d];
    return v;
  };

  for (std::size_t s = 0; s < cfg.source_speakers; ++s) {
    std::string speaker = speaker_name("src_sp", s);
    for (Emotion e : kAllEmotions) {
      std::size_t c = static_cast<std::size_t>(e);
      for (std::size_t k = 0; k < cfg.clips_per_speaker_per_emotion; ++k) {
        FeatureVector fv;
        fv.utterance_id = utterance_name(speaker, e, k);
        fv.speaker_id = speaker;
        fv.emotion = e;
        fv.domain = DomainRole::kSource;
        Vector dev = draw_dev(c);
        fv.values.resize(cfg.dims);
        for (std::size_t d = 0; d < cfg.dims; ++d)
          fv.values[d] = means[c][d] + dev[d] + src_offsets[s][d];
        source.samples.push_back(std::move(fv));
      }
    }
  }

  for (std::size_t s = 0; s < cfg.target_speakers; ++s) {
    std::string speaker = speaker_name("tgt_sp", s);
    for (Emotion e : kAllEmotions) {
      std::size_t c = static_cast<std::size_t>(e);
      for (std::size_t k = 0; k < cfg.clips_per_speaker_per_emotion; ++k) {
        FeatureVector fv;
        fv.utterance_id = utterance_name(speaker, e, k);
        fv.speaker_id = speaker;
        fv.emotion = e;
        fv.domain = DomainRole::kTarget;
        Vector dev = draw_dev(c);
        Vector x(cfg.dims);
        for (std::size_t d = 0; d < cfg.dims; ++d)
          x[d] = means[c][d] + dev[d];
        rot.apply(&x);
        for (std::size_t d = 0; d < cfg.dims; ++d)
          x[d] += shift[d] + tgt_offsets[s][d];
        fv.values = std::move(x);
        target.samples.push_back(std::move(fv));
      }
    }
  }

  return {std::move(source), std::move(target)};
}

}  // namespace data
}  // namespace melfew
