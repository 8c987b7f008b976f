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

#ifndef DILAUG_TESTS_SUPPORT_HPP
#define DILAUG_TESTS_SUPPORT_HPP

// Shared helpers for the test binaries: seeded instance generators and
// from-scratch oracles that share no code with the library kernels.

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <vector>

#include "dilaug/distance.hpp"
#include "dilaug/generators.hpp"
#include "dilaug/metric_graph.hpp"

namespace dilaug::testing {

inline constexpr double kTestInf = std::numeric_limits<double>::infinity();

/// A connected-or-not random instance with both metric kinds, driven by one
/// 64-bit seed so failures can be replayed.
inline MetricGraph random_instance(std::uint64_t seed, std::size_t n, double density,
                                   bool connected = true) {
  RandomInstanceOptions o;
  o.n = n;
  o.edge_density = density;
  o.kind = seed % 2 == 0 ? RandomMetricKind::Euclidean : RandomMetricKind::HostGraph;
  o.seed = seed;
  o.spanning_tree = connected;
  return gen_random(o);
}

/// O(n^2) array Dijkstra from one source over the explicit adjacency.
inline std::vector<double> dijkstra_from(const MetricGraph& g, Vertex source) {
  const std::size_t n = g.size();
  std::vector<double> dist(n, kTestInf);
  std::vector<char> done(n, 0);
  dist[source] = 0.0;
  for (std::size_t round = 0; round < n; ++round) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!done[v] && dist[v] < kTestInf && (best == n || dist[v] < dist[best])) best = v;
    }
    if (best == n) break;
    done[best] = 1;
    for (Vertex v = 0; v < n; ++v) {
      if (g.has_edge(best, v)) dist[v] = std::min(dist[v], dist[best] + g.metric()(best, v));
    }
  }
  return dist;
}

inline double naive_dilation(const MetricGraph& g) {
  double worst = 1.0;
  for (Vertex u = 0; u < g.size(); ++u) {
    const auto d = dijkstra_from(g, u);
    for (Vertex v = u + 1; v < g.size(); ++v) worst = std::max(worst, d[v] / g.metric()(u, v));
  }
  return worst;
}

inline bool close_rel(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::shared_ptr<const MetricSpace> line_metric(std::vector<double> xs) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return std::make_shared<const MetricSpace>(MetricSpace::from_points(std::move(pts)));
}

}  // namespace dilaug::testing

#endif  // DILAUG_TESTS_SUPPORT_HPP
