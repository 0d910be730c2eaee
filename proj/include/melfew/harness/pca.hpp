// include/melfew/harness/pca.hpp

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

#ifndef MELFEW_HARNESS_PCA_HPP_
#define MELFEW_HARNESS_PCA_HPP_

#include <array>
#include <vector>

#include "melfew/common/matrix.hpp"
#include "melfew/data/types.hpp"
#include "melfew/harness/experiment.hpp"

namespace melfew {
namespace harness {

// Top-2 principal directions of a point cloud (population covariance).
// Sign convention: the largest-magnitude loading of each axis is positive.
// Dimensions beyond the data's rank come back as zero axes, so projections
// onto them are 0.
struct Pca2 {
  Vector mean;
  Vector axis1;
  Vector axis2;
  double var1 = 0.0;  // eigenvalue along axis1
  double var2 = 0.0;

  std::array<double, 2> project(const Vector &x) const;
};

// Fewer than 2 rows (or ragged rows) is Error("export").
Pca2 fit_pca2(const std::vector<Vector> &rows);

// Projects per-sample activations onto their own top-2 plane; row i
// corresponds to samples[i].
std::vector<PcaRow> pca_rows(const std::vector<Vector> &activations,
                             const std::vector<data::FeatureVector> &samples);

}  // namespace harness
}  // namespace melfew

#endif  // MELFEW_HARNESS_PCA_HPP_
