// euro/segmenter/pca.hpp

// Copyright 2026  The euro-desk authors

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

#ifndef EURO_SEGMENTER_PCA_HPP_
#define EURO_SEGMENTER_PCA_HPP_

#include <vector>

#include "euro/base/matrix.hpp"

namespace euro::seg {

struct PcaModel {
  std::vector<double> mean;  // over input dim
  Matrix components;         // out_dim x dim, orthonormal rows
  int out_dim() const { return components.rows(); }
  int in_dim() const { return components.cols(); }
};

/// Top out_dim eigenvectors of the sample covariance (1/(n-1)), eigenvalues
/// descending. Row signs are fixed so the largest-magnitude entry is
/// positive. Needs at least out_dim + 1 frames.
PcaModel fit_pca(const Matrix& frames, int out_dim);

/// Centers by the fitted mean and projects onto the components.
Matrix apply_pca(const PcaModel& pca, const Matrix& frames);

/// Symmetric eigendecomposition by cyclic Jacobi rotations. Returns
/// eigenvalues in descending order; rows of vectors are the matching
/// eigenvectors. Exposed for the model fit; tests check it against an
/// independent route.
void symmetric_eigen(const Matrix& sym, std::vector<double>* values,
                     Matrix* vectors);

}  // namespace euro::seg

#endif  // EURO_SEGMENTER_PCA_HPP_
