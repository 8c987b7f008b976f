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

#ifndef DILAUG_DISTANCE_HPP
#define DILAUG_DISTANCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dilaug/edge.hpp"
#include "dilaug/metric_graph.hpp"
#include "dilaug/metric_space.hpp"

namespace dilaug {

/// Dense symmetric shortest-path distances; +inf marks disconnected pairs.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Zero diagonal, +inf elsewhere.
  explicit DistanceMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double operator()(Vertex i, Vertex j) const noexcept { return data_[i * n_ + j]; }
  double& at(Vertex i, Vertex j) noexcept { return data_[i * n_ + j]; }
  double operator()(const Edge& e) const noexcept { return data_[e.u * n_ + e.v]; }

  std::span<const double> row(Vertex i) const noexcept { return {data_.data() + i * n_, n_}; }
  std::span<double> row(Vertex i) noexcept { return {data_.data() + i * n_, n_}; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct DilationReport {
  double dilation = 1.0;  // +inf iff some pair is disconnected
  std::optional<Edge> witness;  // lexicographically first pair attaining the maximum
};

/// All-pairs shortest paths on an arbitrary positively weighted graph.
/// Dijkstra from every source, sources in parallel.
DistanceMatrix shortest_paths(std::size_t n, std::span<const WeightedEdge> edges);

DistanceMatrix apsp(const MetricGraph& g);

/// Distances after inserting edge e of weight w into the graph D describes.
DistanceMatrix incremental_update(const DistanceMatrix& d, const Edge& e, double w);

/// In-place form of incremental_update, O(n^2).
void relax_edge(DistanceMatrix& d, const Edge& e, double w);

/// max over u != v of D[u][v] / d_M(u, v).
DilationReport dilation(const MetricSpace& metric, const DistanceMatrix& d);
DilationReport dilation(const MetricGraph& g, const DistanceMatrix& d);
DilationReport dilation(const MetricGraph& g);

/// Serial reference kernels. Kept independent of the parallel paths above so
/// tests and benchmarks can compare the two.
namespace reference {

/// Floyd-Warshall.
DistanceMatrix shortest_paths(std::size_t n, std::span<const WeightedEdge> edges);
DistanceMatrix apsp(const MetricGraph& g);
void relax_edge(DistanceMatrix& d, const Edge& e, double w);
DilationReport dilation(const MetricSpace& metric, const DistanceMatrix& d);

}  // namespace reference

}  // namespace dilaug

#endif  // DILAUG_DISTANCE_HPP
