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

#ifndef DILAUG_ORACLE_HPP
#define DILAUG_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dilaug/augmentation.hpp"
#include "dilaug/girth.hpp"
#include "dilaug/greedy.hpp"
#include "dilaug/metric_graph.hpp"

namespace dilaug {

/// An augmentation S of G and the dilation of G + S. From brute_force_optimum
/// this is a true optimum; solution_from_edges wraps any known k-edge
/// augmentation, which is enough for the girth-graph argument (it never uses
/// optimality, only the dilation of G + S).
struct OptimalSolution {
  double t_star = 1.0;
  std::vector<Edge> s_star;  // sorted
  MetricGraph g_star;
  bool proven_optimal = false;
};

inline constexpr double kBruteForceGuard = 1e7;

/// Exhaustive minimum over all subsets of min(k, #absent) absent edges. Ties
/// resolve to the lexicographically smallest edge set. Subsets are split over
/// threads by their first edge. Throws TooLarge beyond `max_subsets`.
OptimalSolution brute_force_optimum(const MetricGraph& g, std::size_t k,
                                    double max_subsets = kBruteForceGuard);

OptimalSolution solution_from_edges(const MetricGraph& g, std::vector<Edge> edges);

/// One girth-graph edge: H-vertex labels 2q / 2q+1 are the lower / upper
/// endpoint of s_q, the q-th edge of S* in sorted order.
struct GirthGraphEdge {
  std::size_t greedy_index = 0;  // 0-based i of a_i
  std::size_t a = 0;
  std::size_t b = 0;
};

enum class PathOutcome { HitsOptimal, NoOptEdgeOnPath };

/// The shortest path in G* between the endpoints of one greedy edge.
struct GreedyPath {
  std::vector<Vertex> vertices;  // from a_i.u to a_i.v
  PathOutcome outcome = PathOutcome::HitsOptimal;
  double optimal_length = 0.0;  // total length of S* edges on the path
  double graph_length = 0.0;    // total length of G edges on the path
};

struct GirthGraph {
  std::size_t vertex_count = 0;  // 2 |S*|
  std::vector<GirthGraphEdge> edges;
  std::vector<GreedyPath> paths;  // one per greedy edge
  std::optional<std::size_t> girth;
  std::vector<std::size_t> cycle;  // greedy indices I on the shortest cycle, ascending

  UnweightedGraph as_graph() const;
};

/// Builds H from precomputed paths. Exposed so the construction can be
/// exercised on hand-made path systems.
GirthGraph girth_graph_from_paths(std::span<const Edge> s_star,
                                  std::vector<std::vector<Vertex>> paths,
                                  const MetricSpace* metric = nullptr);

/// Deterministic shortest path in G: Dijkstra where exact distance ties keep
/// the smaller predecessor. Empty if unreachable.
std::vector<Vertex> shortest_path(const MetricGraph& g, Vertex from, Vertex to);

GirthGraph build_girth_graph(const MetricGraph& g, const OptimalSolution& opt,
                             const GreedyTrace& trace);

enum class LemmaBranch {
  NotApplicable,  // greedy added at most fk edges
  DirectBound,    // some greedy path avoids S*, so t < t*
  NoCycle,        // H is a forest (possible when f < 2)
  Case1,          // some j in I has little S* length on its path
  Case2,
};

std::string_view to_string(LemmaBranch branch) noexcept;

struct MainLemmaReport {
  LemmaBranch branch = LemmaBranch::NotApplicable;
  double t = 1.0;
  double t_star = 1.0;
  std::size_t greedy_edges_used = 0;
  std::optional<std::size_t> cycle_length;      // |I|
  std::vector<std::size_t> cycle;               // I
  std::optional<std::size_t> closing_index;     // max I
  std::optional<std::size_t> case1_index;       // j triggering case 1
  double path_length = 0.0;                     // L
  double path_lower_bound = 0.0;                // t * d_M(a_i)
  double path_upper_bound = 0.0;                // |I| * t* * d_M(a_i)
  bool within_cycle_bound = false;              // t <= |I| t*
  bool within_g_bound = false;                  // t <= g t*
  std::vector<std::string> checks;              // inequalities verified, in order
  GirthGraph girth_graph;
};

/// Mechanically replays the girth-graph argument on a concrete run: builds H
/// from the first fk + 1 greedy edges, takes its shortest cycle, rebuilds the
/// path between the endpoints of the cycle's last greedy edge from the other
/// cycle members, and checks every inequality along the way. Throws
/// VerificationFailure when one fails.
MainLemmaReport verify_main_lemma(const MetricGraph& g, const OptimalSolution& opt, double t,
                                  const GreedyTrace& trace, const BicriteriaParams& params);

namespace reference {

/// Recomputes APSP from scratch for every subset.
OptimalSolution brute_force_optimum(const MetricGraph& g, std::size_t k);

}  // namespace reference

}  // namespace dilaug

#endif  // DILAUG_ORACLE_HPP
