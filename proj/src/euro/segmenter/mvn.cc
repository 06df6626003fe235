// euro/segmenter/mvn.cc

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

#include "euro/segmenter/mvn.hpp"

#include <cmath>

#include "euro/base/error.hpp"

namespace euro::seg {

MvnStats fit_mvn(const Matrix& frames) {
  int n = frames.rows(), dim = frames.cols();
  if (n < 2) throw DegenerateDataError("mvn needs at least 2 frames");
  MvnStats stats;
  stats.count = n;
  stats.mean.assign(dim, 0.0);
  stats.std.assign(dim, 0.0);
  for (int r = 0; r < n; ++r) {
    const double* f = frames.row(r);
    for (int c = 0; c < dim; ++c) stats.mean[c] += f[c];
  }
  for (double& m : stats.mean) m /= n;
  for (int r = 0; r < n; ++r) {
    const double* f = frames.row(r);
    for (int c = 0; c < dim; ++c) {
      double d = f[c] - stats.mean[c];
      stats.std[c] += d * d;
    }
  }
  for (int c = 0; c < dim; ++c) {
    stats.std[c] = std::sqrt(stats.std[c] / (n - 1));
    if (stats.std[c] < kMvnStdFloor) {
      stats.std[c] = kMvnStdFloor;
      stats.clamped_dims.push_back(c);
    }
  }
  return stats;
}

Matrix apply_mvn(const MvnStats& stats, const Matrix& frames) {
  int dim = static_cast<int>(stats.mean.size());
  if (frames.cols() != dim)
    throw ShapeError("frame dim does not match MVN stats");
  Matrix out(frames.rows(), dim);
  for (int r = 0; r < frames.rows(); ++r) {
    const double* f = frames.row(r);
    double* o = out.row(r);
    for (int c = 0; c < dim; ++c) o[c] = (f[c] - stats.mean[c]) / stats.std[c];
  }
  return out;
}

}  // namespace euro::seg
