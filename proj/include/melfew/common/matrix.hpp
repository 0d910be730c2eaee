// include/melfew/common/matrix.hpp

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

#ifndef MELFEW_COMMON_MATRIX_HPP_
#define MELFEW_COMMON_MATRIX_HPP_

#include <cstddef>
#include <vector>

namespace melfew {

using Vector = std::vector<double>;

// Dense row-major matrix.  Deliberately minimal: the heavy loops live in the
// kernels module and take raw pointers.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double &operator()(std::size_t r, std::size_t c) {
    return data[r * cols + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }

  double *row(std::size_t r) { return data.data() + r * cols; }
  const double *row(std::size_t r) const { return data.data() + r * cols; }

  std::size_t size() const { return rows * cols; }
};

}  // namespace melfew

#endif  // MELFEW_COMMON_MATRIX_HPP_
