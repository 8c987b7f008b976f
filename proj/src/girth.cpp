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

#include "dilaug/girth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "dilaug/error.hpp"
#include "dilaug/parallel.hpp"

namespace dilaug {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

struct Incidence {
  std::vector<std::size_t> offsets;
  std::vector<std::pair<Vertex, std::size_t>> items;  // (neighbor, edge id)
};

Incidence incidence_of(const UnweightedGraph& h) {
  Incidence inc;
  inc.offsets.assign(h.n + 1, 0);
  for (const auto& [a, b] : h.edges) {
    ++inc.offsets[a + 1];
    if (a != b) ++inc.offsets[b + 1];
  }
  for (std::size_t i = 0; i < h.n; ++i) inc.offsets[i + 1] += inc.offsets[i];
  inc.items.resize(inc.offsets[h.n]);
  std::vector<std::size_t> fill(inc.offsets.begin(), inc.offsets.end() - 1);
  for (std::size_t id = 0; id < h.edges.size(); ++id) {
    const auto [a, b] = h.edges[id];
    inc.items[fill[a]++] = {b, id};
    if (a != b) inc.items[fill[b]++] = {a, id};
  }
  return inc;
}

struct RootCycle {
  std::size_t length = kUnset;
  Vertex x = 0;
  Vertex y = 0;
  std::size_t closing_edge = 0;
};

// BFS from root; the best closing non-tree edge seen. Stops once no shorter
// cycle through the root is possible.
RootCycle bfs_cycle(const Incidence& inc, std::size_t n, Vertex root,
                    std::vector<std::size_t>& dist, std::vector<std::size_t>& parent_edge,
                    std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnset);
  dist[root] = 0;
  parent_edge[root] = kUnset;
  queue.clear();
  queue.push_back(root);
  RootCycle best;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    if (best.length != kUnset && 2 * dist[x] + 1 >= best.length) break;
    for (std::size_t k = inc.offsets[x]; k < inc.offsets[x + 1]; ++k) {
      const auto [y, id] = inc.items[k];
      if (id == parent_edge[x]) continue;
      if (y == x) {  // self-loop
        if (1 < best.length) best = {1, x, x, id};
        continue;
      }
      if (dist[y] == kUnset) {
        dist[y] = dist[x] + 1;
        parent_edge[y] = id;
        queue.push_back(y);
      } else {
        const std::size_t len = dist[x] + dist[y] + 1;
        if (len < best.length) best = {len, x, y, id};
      }
    }
  }
  (void)n;
  return best;
}

}  // namespace

std::optional<Cycle> shortest_cycle(const UnweightedGraph& h) {
  const std::size_t n = h.n;
  if (n == 0) return std::nullopt;
  const Incidence inc = incidence_of(h);
  std::vector<RootCycle> per_root(n);
  const auto count = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel if (n >= kParallelMinRows)
  {
    std::vector<std::size_t> dist(n);
    std::vector<std::size_t> parent_edge(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t r = 0; r < count; ++r) {
      per_root[static_cast<std::size_t>(r)] =
          bfs_cycle(inc, n, static_cast<Vertex>(r), dist, parent_edge, queue);
    }
  }

  std::size_t best_root = kUnset;
  for (std::size_t r = 0; r < n; ++r) {
    if (per_root[r].length == kUnset) continue;
    if (best_root == kUnset || per_root[r].length < per_root[best_root].length) best_root = r;
  }
  if (best_root == kUnset) return std::nullopt;

  // Rebuild the cycle from the winning root's BFS tree.
  std::vector<std::size_t> dist(n);
  std::vector<std::size_t> parent_edge(n);
  std::vector<Vertex> queue;
  const RootCycle rc = bfs_cycle(inc, n, best_root, dist, parent_edge, queue);

  Cycle cycle;
  if (rc.x == rc.y) {
    cycle.edge_ids = {rc.closing_edge};
    cycle.vertices = {rc.x};
    return cycle;
  }
  auto climb = [&](Vertex from) {
    std::vector<std::pair<Vertex, std::size_t>> chain;  // (vertex, edge to parent)
    while (from != best_root) {
      const std::size_t id = parent_edge[from];
      chain.push_back({from, id});
      const auto [a, b] = h.edges[id];
      from = a == from ? b : a;
    }
    return chain;
  };
  const auto left = climb(rc.x);
  const auto right = climb(rc.y);

  cycle.vertices.push_back(best_root);
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    cycle.edge_ids.push_back(it->second);
    cycle.vertices.push_back(it->first);
  }
  cycle.edge_ids.push_back(rc.closing_edge);
  for (const auto& [v, id] : right) {
    cycle.vertices.push_back(v);
    cycle.edge_ids.push_back(id);
  }
  return cycle;
}

std::optional<std::size_t> girth(const UnweightedGraph& h) {
  if (auto c = shortest_cycle(h)) return c->edge_ids.size();
  return std::nullopt;
}

GirthLemmaReport check_girth_lemma(std::size_t n, std::size_t r, std::size_t trials,
                                   std::uint64_t seed) {
  if (r < 1) throw Error(ErrorCode::InvalidParam, "r must be >= 1");
  const double exponent = 1.0 + 1.0 / static_cast<double>(r);
  const auto edges =
      static_cast<std::size_t>(std::ceil(std::pow(static_cast<double>(n), exponent))) + 1;
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (edges > pairs) {
    throw Error(ErrorCode::InvalidParam,
                "n = " + std::to_string(n) + " admits " + std::to_string(pairs) +
                    " edges, fewer than the " + std::to_string(edges) + " required");
  }

  GirthLemmaReport report{n, r, edges, trials, std::nullopt};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> all;
  all.reserve(pairs);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  }

  for (std::size_t trial = 0; trial < trials; ++trial) {
    // Partial Fisher-Yates: the first `edges` slots are a uniform sample.
    for (std::size_t i = 0; i < edges; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pairs - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    UnweightedGraph h{n, {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(edges)}};
    const auto g = girth(h);
    if (g) report.max_girth = std::max(report.max_girth.value_or(0), *g);
    if (!g || *g > 2 * r) {
      throw Error(ErrorCode::LemmaViolation,
                  "sample " + std::to_string(trial) + " has girth " +
                      (g ? std::to_string(*g) : std::string("inf")) + " > 2r = " +
                      std::to_string(2 * r));
    }
  }
  return report;
}

}  // namespace dilaug
