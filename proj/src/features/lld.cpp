// src/features/lld.cpp

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

#include "melfew/features/lld.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "melfew/common/error.hpp"
#include "melfew/kernels/kernels.hpp"

namespace melfew {
namespace features {

std::array<double, kNumLlds> LldFrame::to_array() const {
  std::array<double, kNumLlds> a;
  a[0] = intensity;
  a[1] = zcr;
  a[2] = voicing;
  a[3] = f0;
  for (std::size_t i = 0; i < kNumMfcc; ++i) a[4 + i] = mfcc[i];
  return a;
}

std::vector<Vector> frame_signal(const AudioClip &clip,
                                 const FramingConfig &cfg) {
  if (clip.sample_rate <= 0) throw Error("input", "frame_signal: bad sample rate");
  const std::size_t n = clip.samples.size();
  const std::size_t frame_len = static_cast<std::size_t>(
      std::llround(cfg.frame_ms * clip.sample_rate / 1000.0));
  const std::size_t step_len = static_cast<std::size_t>(
      std::llround(cfg.step_ms * clip.sample_rate / 1000.0));
  if (frame_len < 2 || step_len < 1)
    throw Error("input", "frame_signal: degenerate framing config");
  if (n < frame_len)
    throw Error("input", "frame_signal: clip shorter than one frame");
  const std::size_t num_frames = (n - frame_len) / step_len + 1;

  Vector window(frame_len);
  for (std::size_t i = 0; i < frame_len; ++i)
    window[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i /
                                       static_cast<double>(frame_len - 1));

  std::vector<Vector> frames(num_frames, Vector(frame_len));
  for (std::size_t f = 0; f < num_frames; ++f) {
    const double *src = clip.samples.data() + f * step_len;
    for (std::size_t i = 0; i < frame_len; ++i)
      frames[f][i] = src[i] * window[i];
  }
  return frames;
}

LldExtractor::LldExtractor(int sample_rate, std::size_t frame_len,
                           const LldConfig &cfg)
    : sample_rate_(sample_rate),
      frame_len_(frame_len),
      cfg_(cfg),
      nfft_(next_pow2(frame_len)),
      filterbank_(sample_rate, next_pow2(frame_len), cfg.mel_bands,
                  cfg.mel_f_lo,
                  std::min(cfg.mel_f_hi, sample_rate / 2.0)) {
  if (sample_rate <= 0) throw Error("input", "lld: bad sample rate");
  if (frame_len < 2) throw Error("input", "lld: frame too short");
  // F0 candidate lags, clamped to what the frame can support.
  lag_min_ = static_cast<std::size_t>(
      std::max(1.0, std::floor(sample_rate / cfg.f0_max_hz)));
  lag_max_ = static_cast<std::size_t>(std::ceil(sample_rate / cfg.f0_min_hz));
  if (lag_max_ > frame_len - 2) lag_max_ = frame_len - 2;
  // The frames arrive Hamming-windowed, which biases their autocorrelation
  // low; dividing by the window's own normalized autocorrelation undoes the
  // bias so a clean periodic frame still scores near 1 at its period.
  Vector w(frame_len);
  for (std::size_t i = 0; i < frame_len; ++i)
    w[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i /
                                  static_cast<double>(frame_len - 1));
  window_acf_.assign(lag_max_ + 1, 0.0);
  const double w0 = kernels::dot(w.data(), w.data(), frame_len);
  for (std::size_t tau = 0; tau <= lag_max_ && tau < frame_len; ++tau)
    window_acf_[tau] =
        kernels::dot(w.data(), w.data() + tau, frame_len - tau) / w0;
}

LldFrame LldExtractor::extract(const Vector &frame) const {
  if (frame.size() != frame_len_)
    throw Error("shape", "lld: frame length does not match extractor");
  LldFrame out;
  const std::size_t L = frame_len_;
  const double *x = frame.data();

  // Intensity: log mean-square energy with a floor so silence stays finite.
  double sumsq = kernels::dot(x, x, L);
  out.intensity = std::log(std::max(sumsq / static_cast<double>(L),
                                    cfg_.energy_floor));

  // Zero-crossing rate: strict sign changes over adjacent samples.
  std::size_t crossings = 0;
  for (std::size_t i = 1; i < L; ++i)
    if (x[i - 1] * x[i] < 0.0) ++crossings;
  out.zcr = static_cast<double>(crossings) / static_cast<double>(L - 1);

  // F0 and voicing from the window-corrected autocorrelation ratio
  // r(tau) = [acf_x(tau) / acf_x(0)] / [acf_w(tau) / acf_w(0)].
  // Peak picking pays a small per-octave lag penalty so a periodic frame
  // reports its fundamental rather than an equally correlated subharmonic.
  if (lag_min_ <= lag_max_ && sumsq > 0.0) {
    double best_score = -std::numeric_limits<double>::infinity();
    std::size_t best_lag = 0;
    Vector ncc(lag_max_ + 1, 0.0);
    for (std::size_t tau = lag_min_; tau <= lag_max_; ++tau) {
      double wa = window_acf_[tau];
      double v = wa > 1e-12
                     ? (kernels::dot(x, x + tau, L - tau) / sumsq) / wa
                     : 0.0;
      ncc[tau] = v;
      double score = v - cfg_.octave_cost *
                             std::log2(static_cast<double>(tau) /
                                       static_cast<double>(lag_min_));
      if (score > best_score) {
        best_score = score;
        best_lag = tau;
      }
    }
    double vp = std::clamp(ncc[best_lag], 0.0, 1.0);
    out.voicing = vp;
    if (vp >= cfg_.voicing_cutoff && best_lag > 0) {
      double lag = static_cast<double>(best_lag);
      // Parabolic refinement around the peak when neighbors are in band.
      if (best_lag > lag_min_ && best_lag < lag_max_) {
        double y0 = ncc[best_lag - 1], y1 = ncc[best_lag], y2 = ncc[best_lag + 1];
        double denom = y0 - 2.0 * y1 + y2;
        if (std::abs(denom) > 1e-30) {
          double delta = 0.5 * (y0 - y2) / denom;
          if (delta > -1.0 && delta < 1.0) lag += delta;
        }
      }
      out.f0 = static_cast<double>(sample_rate_) / lag;
    }
  }

  // MFCC 1..12: power spectrum -> mel filterbank -> log -> DCT-II.
  std::vector<double> power = power_spectrum(frame, nfft_);
  std::vector<double> energies = filterbank_.apply(power);
  for (double &e : energies) e = std::log(std::max(e, cfg_.mel_energy_floor));
  std::vector<double> cepstra = dct2(energies, 1, kNumMfcc);
  for (std::size_t i = 0; i < kNumMfcc; ++i) out.mfcc[i] = cepstra[i];
  return out;
}

LldFrame extract_llds(const Vector &frame, int sample_rate,
                      const LldConfig &cfg) {
  LldExtractor ex(sample_rate, frame.size(), cfg);
  return ex.extract(frame);
}

std::vector<LldFrame> extract_lld_track(const AudioClip &clip,
                                        const FramingConfig &framing,
                                        const LldConfig &cfg) {
  std::vector<Vector> frames = frame_signal(clip, framing);
  LldExtractor ex(clip.sample_rate, frames.front().size(), cfg);
  std::vector<LldFrame> track;
  track.reserve(frames.size());
  for (const Vector &f : frames) track.push_back(ex.extract(f));
  return track;
}

}  // namespace features
}  // namespace melfew
