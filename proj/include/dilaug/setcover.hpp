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

#ifndef DILAUG_SETCOVER_HPP
#define DILAUG_SETCOVER_HPP

#include <cstddef>
#include <vector>

#include "dilaug/augmentation.hpp"
#include "dilaug/bitset.hpp"
#include "dilaug/metric_graph.hpp"

namespace dilaug {

/// Index of pair (u, v), u < v, in the n(n-1)/2 pair universe.
std::size_t pair_index(std::size_t n, Vertex u, Vertex v) noexcept;
Edge pair_at(std::size_t n, std::size_t index) noexcept;

/// Set system whose elements are vertex pairs and whose sets S_e hold the
/// pairs with dilation at most t once candidate edge e alone is added.
///
/// `baseline` holds the pairs already within t in G. They lie in every S_e
/// and need no set to cover them.
struct SetCoverInstance {
  std::size_t n = 0;
  double t = 1.0;
  std::size_t universe_size = 0;
  std::vector<Edge> candidates;  // absent edges, lexicographic
  std::vector<Bitset> sets;      // parallel to candidates
  Bitset baseline;
};

struct CoverResult {
  std::vector<std::size_t> chosen_indices;  // into SetCoverInstance::sets, in pick order
  std::vector<Edge> chosen;
  bool covered_all = false;
};

SetCoverInstance build_instance(const MetricGraph& g, double t);

/// Chvatal's greedy: repeatedly take the set with the most uncovered
/// elements (lowest index on ties) until everything is covered or no set
/// makes progress.
CoverResult greedy_set_cover(const SetCoverInstance& instance);

/// Acceptance bound 2k^2 (2 ln n + 1).
double cover_threshold(std::size_t k, std::size_t n);

/// Smallest grid level t whose greedy cover covers everything with at most
/// cover_threshold(k, n) sets.
AugmentationResult setcover_search(const MetricGraph& g, std::size_t k, double delta = 0.1,
                                   double t_limit = kDefaultTLimit);

namespace reference {

/// One full APSP per candidate edge on G + e.
SetCoverInstance build_instance(const MetricGraph& g, double t);
CoverResult greedy_set_cover(const SetCoverInstance& instance);

}  // namespace reference

}  // namespace dilaug

#endif  // DILAUG_SETCOVER_HPP
