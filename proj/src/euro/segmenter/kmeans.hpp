// euro/segmenter/kmeans.hpp

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

#ifndef EURO_SEGMENTER_KMEANS_HPP_
#define EURO_SEGMENTER_KMEANS_HPP_

#include <cstdint>
#include <vector>

#include "euro/base/matrix.hpp"

namespace euro::seg {

struct KmeansModel {
  Matrix centroids;  // k x dim
  int k() const { return centroids.rows(); }
  int dim() const { return centroids.cols(); }
};

/// Lloyd's algorithm with k-means++ seeding. Deterministic under seed.
/// Fewer distinct frames than k is a DegenerateDataError. When inertia_log
/// is given it receives the post-assignment inertia of every iteration
/// (non-increasing by construction).
KmeansModel fit_kmeans(const Matrix& frames, int k, int iters, uint64_t seed,
                       std::vector<double>* inertia_log = nullptr);

/// Nearest centroid by squared distance; ties go to the lowest index.
int nearest_centroid(const KmeansModel& km, const double* frame);

std::vector<int> assign_clusters(const KmeansModel& km, const Matrix& frames);

double kmeans_inertia(const KmeansModel& km, const Matrix& frames);

}  // namespace euro::seg

#endif  // EURO_SEGMENTER_KMEANS_HPP_
