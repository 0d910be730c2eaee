// src/harness/metrics.cpp

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

#include "melfew/harness/metrics.hpp"

#include <string>

#include "melfew/common/error.hpp"

namespace melfew {
namespace harness {

UarResult uar(const ConfusionMatrix &cm) {
  UarResult result;
  double recall_sum = 0.0;
  std::size_t present = 0;
  for (std::size_t c = 0; c < data::kNumEmotions; ++c) {
    std::uint64_t n = cm.row_sum(c);
    if (n == 0) {
      result.warnings.push_back(
          std::string("uar: class ") +
          data::to_string(static_cast<data::Emotion>(c)) +
          " has no test samples and is excluded from the average");
      continue;
    }
    recall_sum += static_cast<double>(cm.counts[c][c]) / static_cast<double>(n);
    ++present;
  }
  if (present == 0)
    throw Error("metric", "uar: confusion matrix has no test samples");
  result.value = recall_sum / static_cast<double>(present);
  return result;
}

}  // namespace harness
}  // namespace melfew
