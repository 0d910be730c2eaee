// include/melfew/data/synth.hpp

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

#ifndef MELFEW_DATA_SYNTH_HPP_
#define MELFEW_DATA_SYNTH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "melfew/data/types.hpp"

namespace melfew {
namespace data {

// Gaussian-cluster generator.  Both domains share per-emotion clusters; the
// target domain is an affine map of them (rotation + translation) plus a
// per-speaker Gaussian offset, which mimics a corpus shift while keeping
// class geometry learnable.
struct SyntheticConfig {
  std::size_t dims = 64;
  std::uint64_t seed = 1;
  std::size_t source_speakers = 8;
  std::size_t target_speakers = 6;
  std::size_t clips_per_speaker_per_emotion = 12;

  // Cluster means: explicit per emotion, or random unit directions scaled
  // by cluster_mean_scale.
  double cluster_mean_scale = 3.0;
  std::optional<std::array<Vector, kNumEmotions>> means;

  // Within-cluster spread: isotropic cluster_std, or explicit per-emotion
  // diagonal covariances (entries must be >= 0).
  double cluster_std = 1.0;
  std::optional<std::array<Vector, kNumEmotions>> cov_diag;

  // Domain shift: translation magnitude along a seeded random unit vector
  // (or an explicit vector) plus paired-coordinate rotations by
  // target_rotation radians.
  double target_shift = 0.0;
  std::optional<Vector> target_shift_vector;
  double target_rotation = 0.0;

  double speaker_offset_std = 0.3;
};

SyntheticConfig load_synthetic_config(const std::string &path);

// Returns {source, target}.  Identical config (and seed) reproduces the
// exact same datasets.
std::pair<Dataset, Dataset> synth_generate(const SyntheticConfig &cfg);

}  // namespace data
}  // namespace melfew

#endif  // MELFEW_DATA_SYNTH_HPP_
