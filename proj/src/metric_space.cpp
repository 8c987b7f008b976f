// Copyright 2026 The dilaug Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dilaug/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dilaug/distance.hpp"
#include "dilaug/error.hpp"

namespace dilaug {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

MetricSpace MetricSpace::from_matrix(std::size_t n, std::vector<double> dist,
                                     Validation validation) {
  if (dist.size() != n * n) {
    throw Error(ErrorCode::InvalidInput, "distance matrix must have n*n = " +
                                             std::to_string(n * n) + " entries, got " +
                                             std::to_string(dist.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i * n + i] != 0.0) {
      throw Error(ErrorCode::NotMetric, "nonzero diagonal at " + pair_str(i, i));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = dist[i * n + j];
      const double b = dist[j * n + i];
      if (!std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorCode::NotMetric, "non-finite distance at " + pair_str(i, j));
      }
      if (a == 0.0 || b == 0.0) {
        throw Error(ErrorCode::ZeroDistance, "distinct points at zero distance " + pair_str(i, j));
      }
      if (a < 0.0 || b < 0.0) {
        throw Error(ErrorCode::NotMetric, "negative distance at " + pair_str(i, j));
      }
      if (std::abs(a - b) > kRelTol * std::max(a, b)) {
        throw Error(ErrorCode::NotMetric, "asymmetric distance at " + pair_str(i, j));
      }
      dist[j * n + i] = a;
    }
  }

  MetricSpace m;
  m.n_ = n;
  m.dist_ = std::move(dist);
  m.origin_ = MetricOrigin::Matrix;
  if (validation == Validation::Full && !m.satisfies_triangle_inequality()) {
    throw Error(ErrorCode::NotMetric, "triangle inequality violated");
  }
  return m;
}

MetricSpace MetricSpace::from_points(std::vector<std::vector<double>> points) {
  const std::size_t n = points.size();
  const std::size_t dim = n == 0 ? 0 : points.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i].size() != dim || dim == 0) {
      throw Error(ErrorCode::InvalidInput,
                  "point " + std::to_string(i) + " has inconsistent dimension");
    }
    for (double x : points[i]) {
      if (!std::isfinite(x)) {
        throw Error(ErrorCode::InvalidInput, "point " + std::to_string(i) + " is not finite");
      }
    }
  }

  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const double diff = points[i][c] - points[j][c];
        sq += diff * diff;
      }
      const double d = std::sqrt(sq);
      if (d == 0.0) {
        throw Error(ErrorCode::DuplicatePoint, "points " + pair_str(i, j) + " coincide");
      }
      dist[i * n + j] = d;
      dist[j * n + i] = d;
    }
  }

  MetricSpace m;
  m.n_ = n;
  m.dist_ = std::move(dist);
  m.origin_ = MetricOrigin::Euclidean;
  m.points_ = std::move(points);
  return m;
}

MetricSpace MetricSpace::from_host_graph(std::size_t n, std::vector<WeightedEdge> host_edges) {
  for (const auto& e : host_edges) {
    if (e.u >= n || e.v >= n || e.u == e.v) {
      throw Error(ErrorCode::InvalidInput,
                  "host edge " + pair_str(e.u, e.v) + " is a self-loop or out of range");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "host edge " + pair_str(e.u, e.v) + " has non-positive weight");
    }
  }

  DistanceMatrix closure = shortest_paths(n, host_edges);
  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = closure(i, j);
      if (d == kInf) {
        throw Error(ErrorCode::DisconnectedHost,
                    "host graph is disconnected: no path " + pair_str(i, j));
      }
      dist[i * n + j] = d;
    }
  }

  MetricSpace m;
  m.n_ = n;
  m.dist_ = std::move(dist);
  m.origin_ = MetricOrigin::HostGraph;
  m.host_edges_ = std::move(host_edges);
  return m;
}

bool MetricSpace::satisfies_triangle_inequality() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double dij = dist_[i * n_ + j];
      for (std::size_t k = 0; k < n_; ++k) {
        if (!leq_tol(dist_[i * n_ + k], dij + dist_[j * n_ + k])) return false;
      }
    }
  }
  return true;
}

}  // namespace dilaug
