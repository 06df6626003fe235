// euro/segmenter/kmeans.cc

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

#include "euro/segmenter/kmeans.hpp"

#include <limits>
#include <random>
#include <set>

#include "euro/base/error.hpp"

namespace euro::seg {

namespace {

int count_distinct_rows(const Matrix& frames, int cap) {
  std::set<std::vector<double>> seen;
  for (int r = 0; r < frames.rows(); ++r) {
    seen.insert(std::vector<double>(frames.row(r), frames.row(r) + frames.cols()));
    if (static_cast<int>(seen.size()) >= cap) break;
  }
  return static_cast<int>(seen.size());
}

// k-means++: first centroid uniform, the rest sampled proportional to the
// squared distance to the nearest already-chosen centroid.
Matrix seed_centroids(const Matrix& frames, int k, std::mt19937_64& rng) {
  int n = frames.rows(), dim = frames.cols();
  Matrix centroids(k, dim);
  std::uniform_int_distribution<int> uniform(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  int first = uniform(rng);
  std::copy(frames.row(first), frames.row(first) + dim, centroids.row(0));

  std::vector<double> d2(n);
  for (int i = 0; i < n; ++i)
    d2[i] = squared_distance(frames.row(i), centroids.row(0), dim);

  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (double d : d2) total += d;
    int chosen;
    if (total <= 0.0) {
      chosen = uniform(rng);  // all remaining mass on duplicates
    } else {
      double target = unit(rng) * total;
      double acc = 0.0;
      chosen = n - 1;
      for (int i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc >= target) {
          chosen = i;
          break;
        }
      }
    }
    std::copy(frames.row(chosen), frames.row(chosen) + dim, centroids.row(c));
    for (int i = 0; i < n; ++i) {
      double d = squared_distance(frames.row(i), centroids.row(c), dim);
      if (d < d2[i]) d2[i] = d;
    }
  }
  return centroids;
}

}  // namespace

int nearest_centroid(const KmeansModel& km, const double* frame) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int c = 0; c < km.k(); ++c) {
    double d = squared_distance(frame, km.centroids.row(c), km.dim());
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

std::vector<int> assign_clusters(const KmeansModel& km, const Matrix& frames) {
  if (frames.cols() != km.dim())
    throw ShapeError("frame dim does not match k-means model");
  std::vector<int> ids(frames.rows());
  for (int r = 0; r < frames.rows(); ++r)
    ids[r] = nearest_centroid(km, frames.row(r));
  return ids;
}

double kmeans_inertia(const KmeansModel& km, const Matrix& frames) {
  double total = 0.0;
  for (int r = 0; r < frames.rows(); ++r) {
    int c = nearest_centroid(km, frames.row(r));
    total += squared_distance(frames.row(r), km.centroids.row(c), km.dim());
  }
  return total;
}

KmeansModel fit_kmeans(const Matrix& frames, int k, int iters, uint64_t seed,
                       std::vector<double>* inertia_log) {
  if (k < 1) throw ConfigError("k must be >= 1");
  if (iters < 1) throw ConfigError("iters must be >= 1");
  if (frames.rows() < k || count_distinct_rows(frames, k) < k)
    throw DegenerateDataError("need at least k distinct frames to fit k=" +
                              std::to_string(k));

  int n = frames.rows(), dim = frames.cols();
  std::mt19937_64 rng(seed);
  KmeansModel model{seed_centroids(frames, k, rng)};
  if (inertia_log) inertia_log->clear();

  std::vector<int> assign(n);
  for (int it = 0; it < iters; ++it) {
    double inertia = 0.0;
    for (int i = 0; i < n; ++i) {
      assign[i] = nearest_centroid(model, frames.row(i));
      inertia += squared_distance(frames.row(i),
                                  model.centroids.row(assign[i]), dim);
    }
    if (inertia_log) inertia_log->push_back(inertia);

    Matrix sums(k, dim);
    std::vector<int> counts(k, 0);
    for (int i = 0; i < n; ++i) {
      const double* f = frames.row(i);
      double* s = sums.row(assign[i]);
      for (int c = 0; c < dim; ++c) s[c] += f[c];
      ++counts[assign[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      double* dst = model.centroids.row(c);
      const double* s = sums.row(c);
      for (int d = 0; d < dim; ++d) dst[d] = s[d] / counts[c];
    }
    // An empty cluster jumps to the point farthest from its centroid, which
    // can only lower the next assignment's inertia.
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) continue;
      int farthest = 0;
      double worst = -1.0;
      for (int i = 0; i < n; ++i) {
        double d = squared_distance(frames.row(i),
                                    model.centroids.row(assign[i]), dim);
        if (d > worst) {
          worst = d;
          farthest = i;
        }
      }
      std::copy(frames.row(farthest), frames.row(farthest) + dim,
                model.centroids.row(c));
    }
  }
  return model;
}

}  // namespace euro::seg
