// include/melfew/features/audio.hpp

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

#ifndef MELFEW_FEATURES_AUDIO_HPP_
#define MELFEW_FEATURES_AUDIO_HPP_

#include <string>
#include <vector>

namespace melfew {
namespace features {

struct AudioClip {
  std::vector<double> samples;  // mono, in [-1, 1)
  int sample_rate = 0;
};

// 16-bit PCM mono WAV.  Anything else (other encodings, multi-channel)
// raises Error("input").
AudioClip read_wav(const std::string &path);
void write_wav(const std::string &path, const AudioClip &clip);

}  // namespace features
}  // namespace melfew

#endif  // MELFEW_FEATURES_AUDIO_HPP_
