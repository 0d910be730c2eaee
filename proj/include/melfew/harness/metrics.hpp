// include/melfew/harness/metrics.hpp

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

#ifndef MELFEW_HARNESS_METRICS_HPP_
#define MELFEW_HARNESS_METRICS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "melfew/data/types.hpp"

namespace melfew {
namespace harness {

struct ConfusionMatrix {
  // counts[true][predicted]
  std::array<std::array<std::uint64_t, data::kNumEmotions>, data::kNumEmotions>
      counts{};

  void add(data::Emotion truth, data::Emotion predicted) {
    ++counts[static_cast<std::size_t>(truth)]
            [static_cast<std::size_t>(predicted)];
  }
  std::uint64_t row_sum(std::size_t c) const {
    std::uint64_t s = 0;
    for (std::uint64_t v : counts[c]) s += v;
    return s;
  }
  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < data::kNumEmotions; ++c) s += row_sum(c);
    return s;
  }
  ConfusionMatrix &operator+=(const ConfusionMatrix &other) {
    for (std::size_t i = 0; i < data::kNumEmotions; ++i)
      for (std::size_t j = 0; j < data::kNumEmotions; ++j)
        counts[i][j] += other.counts[i][j];
    return *this;
  }
};

struct UarResult {
  double value = 0.0;
  std::vector<std::string> warnings;
};

// Unweighted average recall: mean per-class recall over classes that have
// true samples.  Classes without true samples are excluded with a warning;
// an empty matrix is Error("metric").
UarResult uar(const ConfusionMatrix &cm);

}  // namespace harness
}  // namespace melfew

#endif  // MELFEW_HARNESS_METRICS_HPP_
