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

#include <algorithm>

#include "dilaug/distance.hpp"

namespace dilaug::reference {

DistanceMatrix shortest_paths(std::size_t n, std::span<const WeightedEdge> edges) {
  DistanceMatrix d(n);
  for (const auto& e : edges) {
    const double w = std::min(d(e.u, e.v), e.weight);
    d.at(e.u, e.v) = w;
    d.at(e.v, e.u) = w;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = d(i, k);
      if (dik == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double through = dik + d(k, j);
        if (through < d(i, j)) d.at(i, j) = through;
      }
    }
  }
  return d;
}

DistanceMatrix apsp(const MetricGraph& g) {
  const auto edges = g.weighted_edges();
  return reference::shortest_paths(g.size(), edges);
}

void relax_edge(DistanceMatrix& d, const Edge& e, double w) {
  const DistanceMatrix before(d);
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const double a = before(x, e.u) + w + before(e.v, y);
      const double b = before(x, e.v) + w + before(e.u, y);
      d.at(x, y) = std::min({before(x, y), a, b});
    }
  }
}

DilationReport dilation(const MetricSpace& metric, const DistanceMatrix& d) {
  DilationReport report;
  const std::size_t n = d.size();
  if (n < 2) return report;
  double best = -1.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const double ratio = d(x, y) / metric(x, y);
      if (ratio > best) {
        best = ratio;
        report.witness = Edge{x, y};
      }
    }
  }
  report.dilation = best;
  return report;
}

}  // namespace dilaug::reference
