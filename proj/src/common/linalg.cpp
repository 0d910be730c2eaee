// src/common/linalg.cpp

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

#include "melfew/common/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "melfew/common/error.hpp"

namespace melfew {

void sym_eigen(const Matrix &a, Vector *eigenvalues, Matrix *eigenvectors) {
  if (a.rows != a.cols) throw Error("shape", "sym_eigen: matrix not square");
  const std::size_t n = a.rows;
  Matrix d = a;             // working copy, driven to diagonal
  Matrix v(n, n, 0.0);      // accumulated rotations
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  auto offdiag = [&]() {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += d(p, q) * d(p, q);
    return s;
  };

  for (int sweep = 0; sweep < 100 && offdiag() > 1e-24; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = d(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double theta = (d(q, q) - d(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double dkp = d(k, p), dkq = d(k, q);
          d(k, p) = c * dkp - s * dkq;
          d(k, q) = s * dkp + c * dkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double dpk = d(p, k), dqk = d(q, k);
          d(p, k) = c * dpk - s * dqk;
          d(q, k) = s * dpk + c * dqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return d(x, x) > d(y, y);
  });

  eigenvalues->assign(n, 0.0);
  *eigenvectors = Matrix(n, n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    (*eigenvalues)[j] = d(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i)
      (*eigenvectors)(i, j) = v(i, order[j]);
  }
}

}  // namespace melfew
