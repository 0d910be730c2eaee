// include/melfew/data/splits.hpp

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

#ifndef MELFEW_DATA_SPLITS_HPP_
#define MELFEW_DATA_SPLITS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "melfew/data/types.hpp"

namespace melfew {
namespace data {

// k labelled samples per (speaker, emotion) cell into support, the rest
// into test.  Indices refer to the input dataset; support and test
// partition the sampled cells.  Cells with fewer than k samples go fully
// into support (and are noted as warnings); an empty test set is a
// protocol error.
struct FewShotSplit {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> support;
  std::vector<std::size_t> test;
  std::vector<std::string> warnings;
};

FewShotSplit few_shot_split(const Dataset &target, int k, std::uint64_t seed);

// Leave-one-speaker-out folds in sorted speaker order.  Needs >= 2 speakers.
struct LosoFold {
  std::string held_out_speaker;
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

std::vector<LosoFold> loso_folds(const Dataset &dataset);

}  // namespace data
}  // namespace melfew

#endif  // MELFEW_DATA_SPLITS_HPP_
