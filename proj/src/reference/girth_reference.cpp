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
#include <deque>
#include <limits>

#include "dilaug/girth.hpp"

namespace dilaug::reference {

// For every edge, the shortest path between its endpoints once it is removed.
std::optional<std::size_t> girth(const UnweightedGraph& h) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(h.n);
  for (std::size_t id = 0; id < h.edges.size(); ++id) {
    const auto [a, b] = h.edges[id];
    adj[a].push_back({b, id});
    if (a != b) adj[b].push_back({a, id});
  }

  std::size_t best = kUnset;
  for (std::size_t removed = 0; removed < h.edges.size(); ++removed) {
    const auto [a, b] = h.edges[removed];
    if (a == b) return std::size_t{1};
    std::vector<std::size_t> dist(h.n, kUnset);
    std::deque<Vertex> queue{a};
    dist[a] = 0;
    while (!queue.empty() && dist[b] == kUnset) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const auto& [y, id] : adj[x]) {
        if (id == removed || dist[y] != kUnset) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    if (dist[b] != kUnset) best = std::min(best, dist[b] + 1);
  }
  if (best == kUnset) return std::nullopt;
  return best;
}

}  // namespace dilaug::reference
