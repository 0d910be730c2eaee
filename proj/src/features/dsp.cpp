// src/features/dsp.cpp

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

#include "melfew/features/dsp.hpp"

#include <cmath>
#include <numbers>

#include "melfew/common/error.hpp"

namespace melfew {
namespace features {

void fft_radix2(std::vector<std::complex<double>> *data) {
  const std::size_t n = data->size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw Error("usage", "fft_radix2: size must be a power of two");
  auto &a = *data;
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> power_spectrum(const Vector &frame, std::size_t nfft) {
  if (nfft < frame.size())
    throw Error("usage", "power_spectrum: nfft smaller than frame");
  std::vector<std::complex<double>> buf(nfft, {0.0, 0.0});
  for (std::size_t i = 0; i < frame.size(); ++i) buf[i] = {frame[i], 0.0};
  fft_radix2(&buf);
  std::vector<double> power(nfft / 2 + 1);
  for (std::size_t k = 0; k <= nfft / 2; ++k) power[k] = std::norm(buf[k]);
  return power;
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double mel_to_hz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank::MelFilterbank(int sample_rate, std::size_t nfft,
                             std::size_t num_bands, double f_lo, double f_hi)
    : num_bands_(num_bands) {
  if (num_bands == 0) throw Error("usage", "filterbank needs at least one band");
  if (f_hi <= f_lo) throw Error("usage", "filterbank band range is empty");
  const std::size_t num_bins = nfft / 2 + 1;
  double mel_lo = hz_to_mel(f_lo);
  double mel_hi = hz_to_mel(f_hi);
  std::vector<double> edges(num_bands + 2);
  for (std::size_t i = 0; i < edges.size(); ++i)
    edges[i] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) /
                                      static_cast<double>(num_bands + 1));
  weights_.assign(num_bands, std::vector<double>(num_bins, 0.0));
  for (std::size_t m = 0; m < num_bands; ++m) {
    double left = edges[m], center = edges[m + 1], right = edges[m + 2];
    for (std::size_t k = 0; k < num_bins; ++k) {
      double f = static_cast<double>(k) * sample_rate / static_cast<double>(nfft);
      if (f <= left || f >= right) continue;
      weights_[m][k] = f <= center ? (f - left) / (center - left)
                                   : (right - f) / (right - center);
    }
  }
}

std::vector<double> MelFilterbank::apply(const std::vector<double> &power) const {
  std::vector<double> energies(num_bands_, 0.0);
  for (std::size_t m = 0; m < num_bands_; ++m) {
    const auto &w = weights_[m];
    std::size_t n = std::min(w.size(), power.size());
    double e = 0.0;
    for (std::size_t k = 0; k < n; ++k) e += w[k] * power[k];
    energies[m] = e;
  }
  return energies;
}

std::vector<double> dct2(const std::vector<double> &x, std::size_t first,
                         std::size_t count) {
  const std::size_t m = x.size();
  if (m == 0) throw Error("usage", "dct2: empty input");
  std::vector<double> out(count, 0.0);
  double scale = std::sqrt(2.0 / static_cast<double>(m));
  for (std::size_t j = 0; j < count; ++j) {
    double k = static_cast<double>(first + j);
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      s += x[i] * std::cos(std::numbers::pi * k *
                           (static_cast<double>(i) + 0.5) /
                           static_cast<double>(m));
    out[j] = scale * s;
  }
  return out;
}

}  // namespace features
}  // namespace melfew
