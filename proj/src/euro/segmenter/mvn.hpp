// euro/segmenter/mvn.hpp

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

#ifndef EURO_SEGMENTER_MVN_HPP_
#define EURO_SEGMENTER_MVN_HPP_

#include <vector>

#include "euro/base/matrix.hpp"

namespace euro::seg {

constexpr double kMvnStdFloor = 1e-8;

struct MvnStats {
  std::vector<double> mean;
  std::vector<double> std;  // unbiased, clamped to kMvnStdFloor
  long count = 0;
  std::vector<int> clamped_dims;  // dimensions whose std hit the floor
};

/// Needs count >= 2. Zero-variance dimensions are clamped to the floor and
/// reported in clamped_dims rather than raised.
MvnStats fit_mvn(const Matrix& frames);

Matrix apply_mvn(const MvnStats& stats, const Matrix& frames);

}  // namespace euro::seg

#endif  // EURO_SEGMENTER_MVN_HPP_
