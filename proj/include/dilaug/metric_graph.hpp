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

#ifndef DILAUG_METRIC_GRAPH_HPP
#define DILAUG_METRIC_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dilaug/edge.hpp"
#include "dilaug/metric_space.hpp"

namespace dilaug {

/// A simple undirected graph whose vertices are the points of a metric and
/// whose edge weights are the metric distances between endpoints.
class MetricGraph {
 public:
  /// Throws DuplicateEdge on repeated edges, InvalidInput on self-loops or
  /// out-of-range endpoints.
  MetricGraph(std::shared_ptr<const MetricSpace> metric, std::vector<Edge> edges);

  std::size_t size() const noexcept { return metric_->size(); }
  const MetricSpace& metric() const noexcept { return *metric_; }
  const std::shared_ptr<const MetricSpace>& metric_ptr() const noexcept { return metric_; }

  /// Sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(Vertex a, Vertex b) const noexcept {
    return a != b && adjacency_[a * size() + b] != 0;
  }
  double weight(const Edge& e) const noexcept { return (*metric_)(e); }

  std::vector<WeightedEdge> weighted_edges() const;

  /// Unordered pairs not in E(G), sorted by (metric length, u, v).
  std::vector<Edge> absent_edges() const;

  /// G with the given absent edges added.
  MetricGraph with_added(std::span<const Edge> extra) const;

  std::size_t component_count() const;

  friend bool operator==(const MetricGraph& a, const MetricGraph& b) {
    return *a.metric_ == *b.metric_ && a.edges_ == b.edges_;
  }

 private:
  std::shared_ptr<const MetricSpace> metric_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
};

}  // namespace dilaug

#endif  // DILAUG_METRIC_GRAPH_HPP
