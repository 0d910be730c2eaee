// src/features/standardize.cpp

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

#include "melfew/features/standardize.hpp"

#include <cmath>

#include "melfew/common/error.hpp"

namespace melfew {
namespace features {

Vector Standardizer::apply(const Vector &x) const {
  Vector y = x;
  apply_in_place(&y);
  return y;
}

void Standardizer::apply_in_place(Vector *x) const {
  if (x->size() != mean.size())
    throw Error("shape", "standardize: dimension mismatch");
  for (std::size_t d = 0; d < x->size(); ++d)
    (*x)[d] = ((*x)[d] - mean[d]) / stddev[d];
}

Standardizer fit_standardizer(const std::vector<Vector> &rows) {
  if (rows.size() < 2)
    throw Error("input", "fit_standardizer: need at least two rows");
  const std::size_t dim = rows.front().size();
  for (const Vector &r : rows)
    if (r.size() != dim)
      throw Error("shape", "fit_standardizer: ragged rows");
  Standardizer s;
  s.mean.assign(dim, 0.0);
  s.stddev.assign(dim, 0.0);
  const double n = static_cast<double>(rows.size());
  for (const Vector &r : rows)
    for (std::size_t d = 0; d < dim; ++d) s.mean[d] += r[d];
  for (std::size_t d = 0; d < dim; ++d) s.mean[d] /= n;
  for (const Vector &r : rows)
    for (std::size_t d = 0; d < dim; ++d) {
      double dev = r[d] - s.mean[d];
      s.stddev[d] += dev * dev;
    }
  for (std::size_t d = 0; d < dim; ++d) {
    s.stddev[d] = std::sqrt(s.stddev[d] / n);
    if (s.stddev[d] < 1e-12) {
      // Constant dimension: pass through unscaled rather than dividing by 0.
      s.stddev[d] = 1.0;
      s.degenerate_dims.push_back(d);
    }
  }
  return s;
}

}  // namespace features
}  // namespace melfew
