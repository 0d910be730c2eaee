// include/melfew/common/linalg.hpp

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

#ifndef MELFEW_COMMON_LINALG_HPP_
#define MELFEW_COMMON_LINALG_HPP_

#include "melfew/common/matrix.hpp"

namespace melfew {

// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
// Eigenvalues are returned in descending order; eigenvectors[i][j] is
// component i of the eigenvector for eigenvalue j (columns).  Throws
// Error("shape") for non-square input.  Matrices here are small (<= 64).
void sym_eigen(const Matrix &a, Vector *eigenvalues, Matrix *eigenvectors);

}  // namespace melfew

#endif  // MELFEW_COMMON_LINALG_HPP_
