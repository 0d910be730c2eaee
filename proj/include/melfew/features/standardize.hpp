// include/melfew/features/standardize.hpp

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

#ifndef MELFEW_FEATURES_STANDARDIZE_HPP_
#define MELFEW_FEATURES_STANDARDIZE_HPP_

#include <string>
#include <vector>

#include "melfew/common/matrix.hpp"

namespace melfew {
namespace features {

// Per-dataset z-normalization parameters.  Zero-variance dimensions get
// std = 1 (pass-through) and are listed in degenerate_dims as a warning.
struct Standardizer {
  Vector mean;
  Vector stddev;
  std::vector<std::size_t> degenerate_dims;

  Vector apply(const Vector &x) const;
  void apply_in_place(Vector *x) const;
};

// Population statistics over >= 2 rows of equal dimension.
Standardizer fit_standardizer(const std::vector<Vector> &rows);

}  // namespace features
}  // namespace melfew

#endif  // MELFEW_FEATURES_STANDARDIZE_HPP_
