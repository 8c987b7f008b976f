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

#ifndef DILAUG_GIRTH_HPP
#define DILAUG_GIRTH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dilaug/edge.hpp"

namespace dilaug {

/// Undirected multigraph without weights. Parallel edges are allowed and form
/// cycles of length 2.
struct UnweightedGraph {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

struct Cycle {
  std::vector<std::size_t> edge_ids;  // indices into UnweightedGraph::edges
  std::vector<Vertex> vertices;       // in cycle order, first vertex not repeated
};

/// Shortest cycle by BFS from every root (roots in parallel). Empty for
/// forests. Among shortest cycles, the one found from the lowest root wins.
std::optional<Cycle> shortest_cycle(const UnweightedGraph& h);

/// Edge count of the shortest cycle, or nothing (+inf) for a forest.
std::optional<std::size_t> girth(const UnweightedGraph& h);

struct GirthLemmaReport {
  std::size_t n = 0;
  std::size_t r = 1;
  std::size_t edges = 0;  // ceil(n^(1 + 1/r)) + 1
  std::size_t trials = 0;
  std::optional<std::size_t> max_girth;  // over all samples; empty if every sample was a forest
};

/// Samples `trials` uniform simple graphs with n vertices and
/// ceil(n^(1+1/r)) + 1 edges and checks each has girth at most 2r.
/// InvalidParam when that many edges do not fit; LemmaViolation if a sample
/// has larger girth.
GirthLemmaReport check_girth_lemma(std::size_t n, std::size_t r, std::size_t trials,
                                   std::uint64_t seed);

namespace reference {

std::optional<std::size_t> girth(const UnweightedGraph& h);

}  // namespace reference

}  // namespace dilaug

#endif  // DILAUG_GIRTH_HPP
