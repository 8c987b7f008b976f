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

#include <array>

#include "dilaug/distance.hpp"
#include "dilaug/setcover.hpp"

namespace dilaug::reference {

SetCoverInstance build_instance(const MetricGraph& g, double t) {
  const std::size_t n = g.size();
  const MetricSpace& metric = g.metric();
  const double slack = t * (1.0 + kRelTol);

  SetCoverInstance inst;
  inst.n = n;
  inst.t = t;
  inst.universe_size = n * (n - (n > 0 ? 1 : 0)) / 2;
  inst.baseline = Bitset(inst.universe_size);

  auto within = [&](const DistanceMatrix& d) {
    Bitset out(inst.universe_size);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        if (d(x, y) <= slack * metric(x, y)) out.set(pair_index(n, x, y));
      }
    }
    return out;
  };

  inst.baseline = within(reference::apsp(g));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const std::array<Edge, 1> e{Edge{u, v}};
      inst.candidates.push_back(e[0]);
      inst.sets.push_back(within(reference::apsp(g.with_added(e))));
    }
  }
  return inst;
}

CoverResult greedy_set_cover(const SetCoverInstance& instance) {
  CoverResult result;
  Bitset covered = instance.baseline.size() == instance.universe_size
                       ? instance.baseline
                       : Bitset(instance.universe_size);
  std::vector<char> used(instance.sets.size(), 0);
  while (!covered.all()) {
    std::size_t best_gain = 0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < instance.sets.size(); ++i) {
      if (used[i]) continue;
      std::size_t gain = 0;
      for (std::size_t e = 0; e < instance.universe_size; ++e) {
        if (instance.sets[i].test(e) && !covered.test(e)) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best_gain == 0) break;
    used[best] = 1;
    covered |= instance.sets[best];
    result.chosen_indices.push_back(best);
  }
  result.covered_all = covered.all();
  if (instance.candidates.size() == instance.sets.size()) {
    for (std::size_t i : result.chosen_indices) result.chosen.push_back(instance.candidates[i]);
  }
  return result;
}

}  // namespace dilaug::reference
