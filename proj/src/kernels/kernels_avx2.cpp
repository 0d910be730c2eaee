// src/kernels/kernels_avx2.cpp

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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "melfew/kernels/kernels.hpp"

namespace melfew {
namespace kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double avx2_dot(const double *a, const double *b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void avx2_axpy(double alpha, const double *x, double *y, std::size_t n) {
  __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

double avx2_sumsq_diff(const double *a, const double *b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

void avx2_matvec(const double *a, std::size_t rows, std::size_t cols,
                 const double *x, const double *bias, double *y) {
  for (std::size_t r = 0; r < rows; ++r)
    y[r] = avx2_dot(a + r * cols, x, cols) + (bias ? bias[r] : 0.0);
}

void avx2_matvec_t(const double *a, std::size_t rows, std::size_t cols,
                   const double *x, double *y) {
  for (std::size_t c = 0; c < cols; ++c) y[c] = 0.0;
  for (std::size_t r = 0; r < rows; ++r) avx2_axpy(x[r], a + r * cols, y, cols);
}

void avx2_rank1_update(double alpha, const double *x, std::size_t rows,
                       const double *y, std::size_t cols, double *a) {
  for (std::size_t r = 0; r < rows; ++r)
    avx2_axpy(alpha * x[r], y, a + r * cols, cols);
}

void avx2_adam_update(double *w, double *m, double *v, const double *g,
                      std::size_t n, double lr, double beta1, double beta2,
                      double eps, double bc1, double bc2) {
  __m256d vb1 = _mm256_set1_pd(beta1);
  __m256d vb2 = _mm256_set1_pd(beta2);
  __m256d vc1 = _mm256_set1_pd(1.0 - beta1);
  __m256d vc2 = _mm256_set1_pd(1.0 - beta2);
  __m256d vlr = _mm256_set1_pd(lr);
  __m256d veps = _mm256_set1_pd(eps);
  __m256d vibc1 = _mm256_set1_pd(1.0 / bc1);
  __m256d vibc2 = _mm256_set1_pd(1.0 / bc2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vg = _mm256_loadu_pd(g + i);
    __m256d vm = _mm256_fmadd_pd(vc1, vg, _mm256_mul_pd(vb1, _mm256_loadu_pd(m + i)));
    __m256d vv = _mm256_fmadd_pd(vc2, _mm256_mul_pd(vg, vg),
                                 _mm256_mul_pd(vb2, _mm256_loadu_pd(v + i)));
    _mm256_storeu_pd(m + i, vm);
    _mm256_storeu_pd(v + i, vv);
    __m256d mhat = _mm256_mul_pd(vm, vibc1);
    __m256d vhat = _mm256_mul_pd(vv, vibc2);
    __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(vhat), veps);
    __m256d vw = _mm256_loadu_pd(w + i);
    vw = _mm256_sub_pd(vw, _mm256_div_pd(_mm256_mul_pd(vlr, mhat), denom));
    _mm256_storeu_pd(w + i, vw);
  }
  for (; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    double mhat = m[i] * (1.0 / bc1);
    double vhat = v[i] * (1.0 / bc2);
    w[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

const KernelTable kAvx2Table = {
    "avx2",          avx2_dot,          avx2_axpy,
    avx2_sumsq_diff, avx2_matvec,       avx2_matvec_t,
    avx2_rank1_update, avx2_adam_update,
};

}  // namespace

const KernelTable &avx2_table() { return kAvx2Table; }

}  // namespace kernels
}  // namespace melfew
