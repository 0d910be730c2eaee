// include/melfew/features/lld.hpp

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

#ifndef MELFEW_FEATURES_LLD_HPP_
#define MELFEW_FEATURES_LLD_HPP_

#include <array>
#include <vector>

#include "melfew/common/matrix.hpp"
#include "melfew/features/audio.hpp"
#include "melfew/features/dsp.hpp"

namespace melfew {
namespace features {

inline constexpr std::size_t kNumLlds = 16;
inline constexpr std::size_t kNumMfcc = 12;

struct FramingConfig {
  double frame_ms = 25.0;
  double step_ms = 10.0;
};

// Hamming-windowed frames; count = floor((N - frame_len) / step_len) + 1.
// A clip shorter than one frame raises Error("input").
std::vector<Vector> frame_signal(const AudioClip &clip,
                                 const FramingConfig &cfg = {});

// One frame of low-level descriptors, in feature order.
struct LldFrame {
  double intensity = 0.0;  // log mean-square frame energy
  double zcr = 0.0;        // sign-change fraction
  double voicing = 0.0;    // normalized autocorrelation peak, in [0, 1]
  double f0 = 0.0;         // Hz; 0 when the frame is judged unvoiced
  std::array<double, kNumMfcc> mfcc{};

  std::array<double, kNumLlds> to_array() const;
};

struct LldConfig {
  double f0_min_hz = 50.0;
  double f0_max_hz = 500.0;
  double voicing_cutoff = 0.55;     // below this the frame counts as unvoiced
  double octave_cost = 0.01;        // per-octave lag penalty during peak picking
  std::size_t mel_bands = 26;
  double mel_f_lo = 0.0;
  double mel_f_hi = 8000.0;         // capped at Nyquist
  double energy_floor = 1e-12;      // inside the intensity log
  double mel_energy_floor = 1e-10;  // inside the filterbank log
};

// Per-frame extractor; builds the FFT plan and filterbank once per
// (sample_rate, frame_len).
class LldExtractor {
 public:
  LldExtractor(int sample_rate, std::size_t frame_len,
               const LldConfig &cfg = {});
  LldFrame extract(const Vector &frame) const;

 private:
  int sample_rate_;
  std::size_t frame_len_;
  LldConfig cfg_;
  std::size_t nfft_;
  std::size_t lag_min_, lag_max_;
  Vector window_acf_;  // normalized Hamming-window autocorrelation per lag
  MelFilterbank filterbank_;
};

// Convenience wrapper around LldExtractor for a single frame.
LldFrame extract_llds(const Vector &frame, int sample_rate,
                      const LldConfig &cfg = {});

std::vector<LldFrame> extract_lld_track(const AudioClip &clip,
                                        const FramingConfig &framing = {},
                                        const LldConfig &cfg = {});

}  // namespace features
}  // namespace melfew

#endif  // MELFEW_FEATURES_LLD_HPP_
