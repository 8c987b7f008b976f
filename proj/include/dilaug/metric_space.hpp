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

#ifndef DILAUG_METRIC_SPACE_HPP
#define DILAUG_METRIC_SPACE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "dilaug/edge.hpp"

namespace dilaug {

enum class MetricOrigin { Matrix, Euclidean, HostGraph };

enum class Validation { Full, SkipTriangle };

/// A finite metric over points 0..n-1 stored as a dense symmetric matrix.
///
/// The construction origin is kept alongside the matrix (coordinates for
/// Euclidean metrics, the host edge list for graph metrics) so that an
/// instance can be written back out in the same form it was read.
///
/// Distinct points must be at positive distance. Instances are immutable.
class MetricSpace {
 public:
  /// Row-major n x n matrix. Rejects asymmetric entries, nonzero diagonal,
  /// zero/negative/non-finite off-diagonal entries, and (unless skipped)
  /// triangle inequality violations beyond the relative tolerance.
  static MetricSpace from_matrix(std::size_t n, std::vector<double> dist,
                                 Validation validation = Validation::Full);

  /// Euclidean distances between coordinate tuples of equal dimension.
  static MetricSpace from_points(std::vector<std::vector<double>> points);

  /// Shortest-path closure of a connected host graph with positive weights.
  static MetricSpace from_host_graph(std::size_t n, std::vector<WeightedEdge> host_edges);

  std::size_t size() const noexcept { return n_; }
  MetricOrigin origin() const noexcept { return origin_; }

  double operator()(Vertex i, Vertex j) const noexcept { return dist_[i * n_ + j]; }
  double operator()(const Edge& e) const noexcept { return dist_[e.u * n_ + e.v]; }

  std::span<const double> row(Vertex i) const noexcept { return {dist_.data() + i * n_, n_}; }
  std::span<const double> data() const noexcept { return dist_; }

  // Origin payloads; empty unless the origin matches.
  const std::vector<std::vector<double>>& points() const noexcept { return points_; }
  const std::vector<WeightedEdge>& host_edges() const noexcept { return host_edges_; }

  /// dist[i][k] <= dist[i][j] + dist[j][k] for all triples, within the
  /// relative tolerance. O(n^3).
  bool satisfies_triangle_inequality() const;

  friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

 private:
  MetricSpace() = default;

  std::size_t n_ = 0;
  std::vector<double> dist_;
  MetricOrigin origin_ = MetricOrigin::Matrix;
  std::vector<std::vector<double>> points_;
  std::vector<WeightedEdge> host_edges_;
};

}  // namespace dilaug

#endif  // DILAUG_METRIC_SPACE_HPP
