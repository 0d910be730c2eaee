// include/melfew/features/dsp.hpp

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

#ifndef MELFEW_FEATURES_DSP_HPP_
#define MELFEW_FEATURES_DSP_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include "melfew/common/matrix.hpp"

namespace melfew {
namespace features {

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_radix2(std::vector<std::complex<double>> *data);

std::size_t next_pow2(std::size_t n);

// |X_k|^2 for k = 0..nfft/2, from a real frame zero-padded to nfft.
std::vector<double> power_spectrum(const Vector &frame, std::size_t nfft);

double hz_to_mel(double hz);
double mel_to_hz(double mel);

// Triangular mel filterbank over FFT bins, band edges uniform on the mel
// scale between f_lo and f_hi.
class MelFilterbank {
 public:
  MelFilterbank(int sample_rate, std::size_t nfft, std::size_t num_bands,
                double f_lo, double f_hi);
  std::size_t num_bands() const { return num_bands_; }
  // Band energies from a power spectrum of size nfft/2 + 1.
  std::vector<double> apply(const std::vector<double> &power) const;

 private:
  std::size_t num_bands_;
  std::vector<std::vector<double>> weights_;  // per band, over all bins
};

// Orthonormal-style DCT-II: c_k = sqrt(2/M) * sum_m x_m cos(pi k (m+0.5)/M)
// for k = first..first+count-1.
std::vector<double> dct2(const std::vector<double> &x, std::size_t first,
                         std::size_t count);

}  // namespace features
}  // namespace melfew

#endif  // MELFEW_FEATURES_DSP_HPP_
