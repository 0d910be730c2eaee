// src/kernels/kernels.cpp

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

#include "melfew/kernels/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>

#include "melfew/common/error.hpp"

namespace melfew {
namespace kernels {

namespace {

double scalar_dot(const double *a, const double *b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void scalar_axpy(double alpha, const double *x, double *y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double scalar_sumsq_diff(const double *a, const double *b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

void scalar_matvec(const double *a, std::size_t rows, std::size_t cols,
                   const double *x, const double *bias, double *y) {
  for (std::size_t r = 0; r < rows; ++r)
    y[r] = scalar_dot(a + r * cols, x, cols) + (bias ? bias[r] : 0.0);
}

void scalar_matvec_t(const double *a, std::size_t rows, std::size_t cols,
                     const double *x, double *y) {
  for (std::size_t c = 0; c < cols; ++c) y[c] = 0.0;
  for (std::size_t r = 0; r < rows; ++r) scalar_axpy(x[r], a + r * cols, y, cols);
}

void scalar_rank1_update(double alpha, const double *x, std::size_t rows,
                         const double *y, std::size_t cols, double *a) {
  for (std::size_t r = 0; r < rows; ++r)
    scalar_axpy(alpha * x[r], y, a + r * cols, cols);
}

void scalar_adam_update(double *w, double *m, double *v, const double *g,
                        std::size_t n, double lr, double beta1, double beta2,
                        double eps, double bc1, double bc2) {
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
    v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
    double mhat = m[i] / bc1;
    double vhat = v[i] / bc2;
    w[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

const KernelTable kScalarTable = {
    "scalar",        scalar_dot,          scalar_axpy,
    scalar_sumsq_diff, scalar_matvec,     scalar_matvec_t,
    scalar_rank1_update, scalar_adam_update,
};

}  // namespace

#if MELFEW_HAVE_AVX2
const KernelTable &avx2_table();  // defined in kernels_avx2.cpp
#endif

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if MELFEW_HAVE_AVX2
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const char *backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "?";
}

const KernelTable &table_for(Backend b) {
  if (!backend_supported(b))
    throw Error("usage", std::string("kernel backend '") + backend_name(b) +
                             "' not supported on this host");
  switch (b) {
    case Backend::kScalar:
      return kScalarTable;
    case Backend::kAvx2:
#if MELFEW_HAVE_AVX2
      return avx2_table();
#else
      break;
#endif
  }
  return kScalarTable;
}

namespace {

std::atomic<const KernelTable *> g_active{nullptr};
std::atomic<Backend> g_active_backend{Backend::kScalar};

Backend pick_auto() {
  if (const char *env = std::getenv("MELFEW_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
    if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::kAvx2))
      return Backend::kAvx2;
    // Unknown or unsupported value: fall through to detection.
  }
  if (backend_supported(Backend::kAvx2)) return Backend::kAvx2;
  return Backend::kScalar;
}

const KernelTable &active() {
  const KernelTable *t = g_active.load(std::memory_order_acquire);
  if (t) return *t;
  Backend b = pick_auto();
  g_active_backend.store(b, std::memory_order_relaxed);
  g_active.store(&table_for(b), std::memory_order_release);
  return *g_active.load(std::memory_order_acquire);
}

}  // namespace

Backend active_backend() {
  active();
  return g_active_backend.load(std::memory_order_relaxed);
}

bool set_backend(Backend b) {
  if (!backend_supported(b)) return false;
  g_active_backend.store(b, std::memory_order_relaxed);
  g_active.store(&table_for(b), std::memory_order_release);
  return true;
}

void use_auto_backend() {
  g_active.store(nullptr, std::memory_order_release);
  active();
}

double dot(const double *a, const double *b, std::size_t n) {
  return active().dot(a, b, n);
}
void axpy(double alpha, const double *x, double *y, std::size_t n) {
  active().axpy(alpha, x, y, n);
}
double sumsq_diff(const double *a, const double *b, std::size_t n) {
  return active().sumsq_diff(a, b, n);
}
void matvec(const double *a, std::size_t rows, std::size_t cols,
            const double *x, const double *bias, double *y) {
  active().matvec(a, rows, cols, x, bias, y);
}
void matvec_t(const double *a, std::size_t rows, std::size_t cols,
              const double *x, double *y) {
  active().matvec_t(a, rows, cols, x, y);
}
void rank1_update(double alpha, const double *x, std::size_t rows,
                  const double *y, std::size_t cols, double *a) {
  active().rank1_update(alpha, x, rows, y, cols, a);
}
void adam_update(double *w, double *m, double *v, const double *g,
                 std::size_t n, double lr, double beta1, double beta2,
                 double eps, double bc1, double bc2) {
  active().adam_update(w, m, v, g, n, lr, beta1, beta2, eps, bc1, bc2);
}

}  // namespace kernels
}  // namespace melfew
