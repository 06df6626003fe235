// euro/segmenter/pca.cc

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

#include "euro/segmenter/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "euro/base/error.hpp"

namespace euro::seg {

void symmetric_eigen(const Matrix& sym, std::vector<double>* values,
                     Matrix* vectors) {
  int n = sym.rows();
  if (sym.cols() != n) throw ShapeError("symmetric_eigen needs a square matrix");
  Matrix a = sym;
  Matrix v(n, n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a(x, x) > a(y, y); });
  values->resize(n);
  *vectors = Matrix(n, n);
  for (int i = 0; i < n; ++i) {
    (*values)[i] = a(order[i], order[i]);
    for (int j = 0; j < n; ++j) (*vectors)(i, j) = v(j, order[i]);
  }
}

PcaModel fit_pca(const Matrix& frames, int out_dim) {
  int n = frames.rows(), dim = frames.cols();
  if (out_dim < 1 || out_dim > dim)
    throw ConfigError("pca out_dim must be in [1, dim]");
  if (n < out_dim + 1)
    throw DegenerateDataError("pca needs at least out_dim + 1 frames");

  PcaModel model;
  model.mean.assign(dim, 0.0);
  for (int r = 0; r < n; ++r) {
    const double* f = frames.row(r);
    for (int c = 0; c < dim; ++c) model.mean[c] += f[c];
  }
  for (double& m : model.mean) m /= n;

  Matrix cov(dim, dim);
  for (int r = 0; r < n; ++r) {
    const double* f = frames.row(r);
    for (int i = 0; i < dim; ++i) {
      double di = f[i] - model.mean[i];
      double* crow = cov.row(i);
      for (int j = i; j < dim; ++j) crow[j] += di * (f[j] - model.mean[j]);
    }
  }
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      cov(i, j) /= (n - 1);
      cov(j, i) = cov(i, j);
    }

  std::vector<double> values;
  Matrix vectors;
  symmetric_eigen(cov, &values, &vectors);

  model.components = Matrix(out_dim, dim);
  for (int r = 0; r < out_dim; ++r) {
    const double* src = vectors.row(r);
    // Deterministic sign: largest-magnitude entry made positive.
    int arg = 0;
    for (int c = 1; c < dim; ++c)
      if (std::abs(src[c]) > std::abs(src[arg])) arg = c;
    double sign = src[arg] < 0 ? -1.0 : 1.0;
    for (int c = 0; c < dim; ++c) model.components(r, c) = sign * src[c];
  }
  return model;
}

Matrix apply_pca(const PcaModel& pca, const Matrix& frames) {
  if (frames.cols() != pca.in_dim())
    throw ShapeError("frame dim does not match PCA model");
  int n = frames.rows(), dim = pca.in_dim(), out = pca.out_dim();
  Matrix projected(n, out);
  std::vector<double> centered(dim);
  for (int r = 0; r < n; ++r) {
    const double* f = frames.row(r);
    for (int c = 0; c < dim; ++c) centered[c] = f[c] - pca.mean[c];
    double* dst = projected.row(r);
    for (int k = 0; k < out; ++k)
      dst[k] = std::inner_product(centered.begin(), centered.end(),
                                  pca.components.row(k), 0.0);
  }
  return projected;
}

}  // namespace euro::seg
