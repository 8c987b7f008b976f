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

#include "dilaug/metric_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dilaug/error.hpp"

namespace dilaug {

MetricGraph::MetricGraph(std::shared_ptr<const MetricSpace> metric, std::vector<Edge> edges)
    : metric_(std::move(metric)), edges_(std::move(edges)) {
  if (!metric_) throw Error(ErrorCode::InvalidInput, "graph requires a metric");
  const std::size_t n = metric_->size();
  adjacency_.assign(n * n, 0);
  for (Edge& e : edges_) {
    e = Edge::make(e.u, e.v);
    if (e.v >= n) {
      throw Error(ErrorCode::InvalidInput, "edge endpoint " + std::to_string(e.v) +
                                               " out of range for n = " + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::InvalidInput, "self-loop at " + std::to_string(e.u));
    }
    auto& slot = adjacency_[e.u * n + e.v];
    if (slot != 0) {
      throw Error(ErrorCode::DuplicateEdge, "duplicate edge (" + std::to_string(e.u) + ", " +
                                                std::to_string(e.v) + ")");
    }
    slot = 1;
    adjacency_[e.v * n + e.u] = 1;
  }
  std::sort(edges_.begin(), edges_.end());
}

std::vector<WeightedEdge> MetricGraph::weighted_edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({e.u, e.v, weight(e)});
  return out;
}

std::vector<Edge> MetricGraph::absent_edges() const {
  const std::size_t n = size();
  std::vector<Edge> out;
  if (n > 1) out.reserve(n * (n - 1) / 2 - edges_.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!has_edge(u, v)) out.push_back({u, v});
    }
  }
  const MetricSpace& m = *metric_;
  std::stable_sort(out.begin(), out.end(),
                   [&m](const Edge& a, const Edge& b) { return m(a) < m(b); });
  return out;
}

MetricGraph MetricGraph::with_added(std::span<const Edge> extra) const {
  std::vector<Edge> all(edges_);
  all.insert(all.end(), extra.begin(), extra.end());
  return MetricGraph(metric_, std::move(all));
}

std::size_t MetricGraph::component_count() const {
  const std::size_t n = size();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&parent](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : edges_) {
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace dilaug
