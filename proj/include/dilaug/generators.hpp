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

#ifndef DILAUG_GENERATORS_HPP
#define DILAUG_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dilaug/girth.hpp"
#include "dilaug/metric_graph.hpp"

namespace dilaug {

/// Names and edge classes carried next to a generated instance.
struct InstanceLabels {
  std::vector<std::string> vertex_names;
  std::vector<std::pair<std::string, std::vector<Edge>>> edge_classes;
  std::vector<Edge> reference_solution;  // a known k-edge augmentation, if any
  std::vector<std::pair<std::string, double>> params;

  const std::vector<Edge>* edge_class(const std::string& name) const;
  std::optional<double> param(const std::string& name) const;

  friend bool operator==(const InstanceLabels&, const InstanceLabels&) = default;
};

namespace cages {

UnweightedGraph k33();           // girth 4
UnweightedGraph heawood();       // girth 6, 14 vertices, 21 edges
UnweightedGraph tutte_coxeter(); // girth 8, 30 vertices, 45 edges

}  // namespace cages

/// Greedy lower-bound family built from a high-girth graph H with vertices
/// w_1..w_n and edges e_1..e_m. Points u_{i,j}, 1 <= i <= n, 0 <= j <= m.
/// The metric is the closure of
///   M1 = u_{i,0} u_{i,j}            length 1
///   M2 = u_{i,0} u_{i+1,0}          length 2 eps
///   M3 = u_{a,j} u_{b,j}, e_j = w_a w_b   length eps
/// with eps = 1 / (4 r n), and G = M1.
struct GirthLowerBoundInstance {
  MetricGraph graph;
  UnweightedGraph source;
  std::size_t r = 1;
  double epsilon = 0.0;
  std::size_t k = 0;  // n - 1
  double f = 0.0;     // (m - 1) / (n - 1), so f k = m - 1
  std::vector<Edge> m1, m2, m3;

  std::size_t h_vertices() const noexcept { return source.n; }
  std::size_t h_edges() const noexcept { return source.edges.size(); }
  /// 1-based i, 0-based j as in the construction.
  Vertex u(std::size_t i, std::size_t j) const noexcept { return (i - 1) * (h_edges() + 1) + j; }
  /// (2 n eps + 2) / eps, the dilation of G + M2 is at most this.
  double t_upper() const noexcept {
    return (2.0 * static_cast<double>(h_vertices()) * epsilon + 2.0) / epsilon;
  }
  InstanceLabels labels() const;
};

/// Requires H simple and connected with girth >= 2r + 2 (GirthTooSmall
/// otherwise); forests pass.
GirthLowerBoundInstance gen_girth_lowerbound(const UnweightedGraph& h, std::size_t r);

/// Set-cover gadget. Element e_i gets 2k + 2 points u_{i,j}, u'_{i,j}
/// (1 <= j <= k + 1); set S_l gets v_l, v'_l, w_l. Host edges:
///   M1 u_{i,j} u'_{i,j} (1), M2 v_l v'_l (1),
///   M3 u_{i,j} v_l, M4 u'_{i,j} v'_l for e_i in S_l (2/eps),
///   M5 v_l w_l, M6 v'_l w_l (2/eps),
/// and G = M3 + M4 + M5 + M6. When the element/set incidence splits into
/// several components the host graph would be disconnected; the components
/// are then chained by `bridges` w_a w_b (2/eps, also in G), where w_a is the
/// lowest-numbered set of each component. No M1 or M2 pair gets shorter.
struct SetCoverGadgetInstance {
  MetricGraph graph;
  double epsilon = 0.25;
  std::size_t k = 1;
  std::size_t element_count = 0;
  std::vector<std::vector<std::size_t>> sets;  // 0-based element ids
  std::vector<Edge> m1, m2, m3, m4, m5, m6;
  std::vector<Edge> bridges;

  std::size_t set_count() const noexcept { return sets.size(); }
  // 1-based element i, 1-based copy j, 1-based set l.
  Vertex u(std::size_t i, std::size_t j) const noexcept { return (i - 1) * (2 * k + 2) + 2 * (j - 1); }
  Vertex u_prime(std::size_t i, std::size_t j) const noexcept { return u(i, j) + 1; }
  Vertex v(std::size_t l) const noexcept { return element_count * (2 * k + 2) + 3 * (l - 1); }
  Vertex v_prime(std::size_t l) const noexcept { return v(l) + 1; }
  Vertex w(std::size_t l) const noexcept { return v(l) + 2; }
  /// The M2 edges of the given 0-based sets.
  std::vector<Edge> set_edges(const std::vector<std::size_t>& chosen_sets) const;
  /// 4 / eps + 1
  double yes_bound() const noexcept { return 4.0 / epsilon + 1.0; }
  InstanceLabels labels() const;
};

/// `sets` hold 0-based element ids. EmptySet for an empty set; InvalidInput
/// for an element in no set (its points would be disconnected from the rest
/// of the metric) or an out-of-range element; InvalidParam unless 0 < eps < 1.
SetCoverGadgetInstance gen_setcover_gadget(std::size_t elements,
                                           const std::vector<std::vector<std::size_t>>& sets,
                                           std::size_t k, double epsilon = 0.25);

enum class RandomMetricKind { Euclidean, HostGraph };

struct RandomInstanceOptions {
  std::size_t n = 10;
  double edge_density = 0.3;  // independent probability per pair
  RandomMetricKind kind = RandomMetricKind::Euclidean;
  std::uint64_t seed = 1;
  bool spanning_tree = false;  // also add a random spanning tree so G is connected
};

/// Euclidean points in the unit square, or the closure of a random connected
/// host graph with weights in [1, 10). Same options, same instance.
MetricGraph gen_random(const RandomInstanceOptions& options);

}  // namespace dilaug

#endif  // DILAUG_GENERATORS_HPP
