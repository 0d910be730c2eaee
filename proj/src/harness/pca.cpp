// src/harness/pca.cpp

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

#include "melfew/harness/pca.hpp"

#include <cmath>
#include <cstdlib>

#include "melfew/common/error.hpp"
#include "melfew/common/linalg.hpp"

namespace melfew {
namespace harness {

namespace {

// Largest-|loading| component forced positive; first such index wins ties.
void fix_sign(Vector *axis) {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < axis->size(); ++i) {
    double mag = std::fabs((*axis)[i]);
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  if (!axis->empty() && (*axis)[best] < 0.0)
    for (double &v : *axis) v = -v;
}

}  // namespace

std::array<double, 2> Pca2::project(const Vector &x) const {
  std::array<double, 2> out{0.0, 0.0};
  for (std::size_t i = 0; i < mean.size(); ++i) {
    double c = x[i] - mean[i];
    out[0] += axis1[i] * c;
    out[1] += axis2[i] * c;
  }
  return out;
}

Pca2 fit_pca2(const std::vector<Vector> &rows) {
  if (rows.size() < 2)
    throw Error("export", "pca: need at least 2 samples");
  const std::size_t dim = rows.front().size();
  if (dim == 0) throw Error("export", "pca: zero-dimensional activations");
  for (const Vector &row : rows)
    if (row.size() != dim)
      throw Error("export", "pca: ragged activation rows");

  Pca2 pca;
  pca.mean.assign(dim, 0.0);
  for (const Vector &row : rows)
    for (std::size_t i = 0; i < dim; ++i) pca.mean[i] += row[i];
  for (double &m : pca.mean) m /= static_cast<double>(rows.size());

  Matrix cov(dim, dim);
  for (const Vector &row : rows) {
    for (std::size_t i = 0; i < dim; ++i) {
      double ci = row[i] - pca.mean[i];
      for (std::size_t j = i; j < dim; ++j)
        cov(i, j) += ci * (row[j] - pca.mean[j]);
    }
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      cov(i, j) /= static_cast<double>(rows.size());
      cov(j, i) = cov(i, j);
    }

  Vector eigenvalues;
  Matrix eigenvectors;
  sym_eigen(cov, &eigenvalues, &eigenvectors);

  pca.axis1.assign(dim, 0.0);
  pca.axis2.assign(dim, 0.0);
  if (dim >= 1) {
    for (std::size_t i = 0; i < dim; ++i) pca.axis1[i] = eigenvectors(i, 0);
    pca.var1 = eigenvalues[0];
    fix_sign(&pca.axis1);
  }
  if (dim >= 2) {
    for (std::size_t i = 0; i < dim; ++i) pca.axis2[i] = eigenvectors(i, 1);
    pca.var2 = eigenvalues[1];
    fix_sign(&pca.axis2);
  }
  return pca;
}

std::vector<PcaRow> pca_rows(const std::vector<Vector> &activations,
                             const std::vector<data::FeatureVector> &samples) {
  if (activations.size() != samples.size())
    throw Error("export", "pca: activation/sample count mismatch");
  Pca2 pca = fit_pca2(activations);
  std::vector<PcaRow> rows;
  rows.reserve(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::array<double, 2> p = pca.project(activations[i]);
    PcaRow row;
    row.utterance_id = samples[i].utterance_id;
    row.emotion = samples[i].emotion;
    row.pc1 = p[0];
    row.pc2 = p[1];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace harness
}  // namespace melfew
