// include/melfew/kernels/kernels.hpp

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

#ifndef MELFEW_KERNELS_KERNELS_HPP_
#define MELFEW_KERNELS_KERNELS_HPP_

#include <cstddef>

namespace melfew {
namespace kernels {

// Numeric hot loops behind a runtime-dispatched table.  The scalar table is
// the reference; vector backends must agree with it within a small relative
// tolerance (FMA contraction reorders rounding, so bit-equality is not
// required across backends).  Within one process the selected backend is
// fixed unless set_backend() is called, keeping runs reproducible.
enum class Backend { kScalar = 0, kAvx2 = 1 };

struct KernelTable {
  const char *name;
  double (*dot)(const double *a, const double *b, std::size_t n);
  void (*axpy)(double alpha, const double *x, double *y, std::size_t n);
  double (*sumsq_diff)(const double *a, const double *b, std::size_t n);
  // y = A x + bias; A is rows x cols row-major; bias may be null.
  void (*matvec)(const double *a, std::size_t rows, std::size_t cols,
                 const double *x, const double *bias, double *y);
  // y = A^T x; x has rows elements, y has cols elements.
  void (*matvec_t)(const double *a, std::size_t rows, std::size_t cols,
                   const double *x, double *y);
  // A += alpha * x y^T.
  void (*rank1_update)(double alpha, const double *x, std::size_t rows,
                       const double *y, std::size_t cols, double *a);
  // One Adam update over n parameters; bc1/bc2 are the bias corrections
  // 1 - beta1^t and 1 - beta2^t.
  void (*adam_update)(double *w, double *m, double *v, const double *g,
                      std::size_t n, double lr, double beta1, double beta2,
                      double eps, double bc1, double bc2);
};

const char *backend_name(Backend b);
bool backend_supported(Backend b);
// Table for an explicit backend (equivalence tests); Error("usage") if the
// backend is not compiled in or the CPU lacks it.
const KernelTable &table_for(Backend b);

// Active backend.  Default: best supported, overridable with environment
// variable MELFEW_KERNELS=scalar|avx2.
Backend active_backend();
bool set_backend(Backend b);  // false and no change if unsupported
void use_auto_backend();

double dot(const double *a, const double *b, std::size_t n);
void axpy(double alpha, const double *x, double *y, std::size_t n);
double sumsq_diff(const double *a, const double *b, std::size_t n);
void matvec(const double *a, std::size_t rows, std::size_t cols,
            const double *x, const double *bias, double *y);
void matvec_t(const double *a, std::size_t rows, std::size_t cols,
              const double *x, double *y);
void rank1_update(double alpha, const double *x, std::size_t rows,
                  const double *y, std::size_t cols, double *a);
void adam_update(double *w, double *m, double *v, const double *g,
                 std::size_t n, double lr, double beta1, double beta2,
                 double eps, double bc1, double bc2);

}  // namespace kernels
}  // namespace melfew

#endif  // MELFEW_KERNELS_KERNELS_HPP_
