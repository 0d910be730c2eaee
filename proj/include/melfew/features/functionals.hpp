// include/melfew/features/functionals.hpp

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

#ifndef MELFEW_FEATURES_FUNCTIONALS_HPP_
#define MELFEW_FEATURES_FUNCTIONALS_HPP_

#include <vector>

#include "melfew/common/matrix.hpp"
#include "melfew/features/lld.hpp"

namespace melfew {
namespace features {

inline constexpr std::size_t kDescriptorDim = 64;

// Utterance-level descriptor: [mean(16), std(16), delta-mean(16),
// delta-std(16)] over the LLD track.  Deltas are backward differences
// (the first frame has none), stds are population stds.  Needs >= 2 frames.
Vector functionals(const std::vector<LldFrame> &track);

// Full pipeline: clip -> frames -> LLDs -> 64-dim descriptor.
Vector compute_descriptor(const AudioClip &clip,
                          const FramingConfig &framing = {},
                          const LldConfig &cfg = {});

}  // namespace features
}  // namespace melfew

#endif  // MELFEW_FEATURES_FUNCTIONALS_HPP_
