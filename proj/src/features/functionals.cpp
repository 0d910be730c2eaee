// src/features/functionals.cpp

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

#include "melfew/features/functionals.hpp"

#include <cmath>

#include "melfew/common/error.hpp"

namespace melfew {
namespace features {

namespace {

// Population mean and std per column of a T x 16 track.
void mean_std(const std::vector<std::array<double, kNumLlds>> &rows,
              double *mean_out, double *std_out) {
  const double t = static_cast<double>(rows.size());
  for (std::size_t d = 0; d < kNumLlds; ++d) {
    double mean = 0.0;
    for (const auto &r : rows) mean += r[d];
    mean /= t;
    double var = 0.0;
    for (const auto &r : rows) {
      double dev = r[d] - mean;
      var += dev * dev;
    }
    var /= t;
    mean_out[d] = mean;
    std_out[d] = std::sqrt(var);
  }
}

}  // namespace

Vector functionals(const std::vector<LldFrame> &track) {
  if (track.size() < 2)
    throw Error("input", "functionals: need at least two frames");
  std::vector<std::array<double, kNumLlds>> rows;
  rows.reserve(track.size());
  for (const LldFrame &f : track) rows.push_back(f.to_array());

  std::vector<std::array<double, kNumLlds>> deltas;
  deltas.reserve(rows.size() - 1);
  for (std::size_t t = 1; t < rows.size(); ++t) {
    std::array<double, kNumLlds> d;
    for (std::size_t i = 0; i < kNumLlds; ++i) d[i] = rows[t][i] - rows[t - 1][i];
    deltas.push_back(d);
  }

  Vector out(kDescriptorDim, 0.0);
  mean_std(rows, out.data(), out.data() + kNumLlds);
  mean_std(deltas, out.data() + 2 * kNumLlds, out.data() + 3 * kNumLlds);
  return out;
}

Vector compute_descriptor(const AudioClip &clip, const FramingConfig &framing,
                          const LldConfig &cfg) {
  return functionals(extract_lld_track(clip, framing, cfg));
}

}  // namespace features
}  // namespace melfew
