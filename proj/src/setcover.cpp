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

#include "dilaug/setcover.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "dilaug/distance.hpp"
#include "dilaug/error.hpp"
#include "dilaug/grid_search.hpp"
#include "dilaug/parallel.hpp"

namespace dilaug {

std::size_t pair_index(std::size_t n, Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Edge pair_at(std::size_t n, std::size_t index) noexcept {
  Vertex u = 0;
  std::size_t row = n - 1;
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + index};
}

namespace {

std::vector<Edge> lexicographic_candidates(const MetricGraph& g) {
  std::vector<Edge> out;
  const std::size_t n = g.size();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace

SetCoverInstance build_instance(const MetricGraph& g, double t) {
  if (!(t >= 1.0)) throw Error(ErrorCode::InvalidParam, "t must be >= 1");
  const std::size_t n = g.size();
  const MetricSpace& metric = g.metric();
  const DistanceMatrix d = apsp(g);
  const double slack = t * (1.0 + kRelTol);

  SetCoverInstance inst;
  inst.n = n;
  inst.t = t;
  inst.universe_size = n * (n - (n > 0 ? 1 : 0)) / 2;
  inst.candidates = lexicographic_candidates(g);
  inst.baseline = Bitset(inst.universe_size);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (d(x, y) <= slack * metric(x, y)) inst.baseline.set(pair_index(n, x, y));
    }
  }

  inst.sets.assign(inst.candidates.size(), Bitset(inst.universe_size));
  const auto count = static_cast<std::ptrdiff_t>(inst.candidates.size());
#pragma omp parallel for schedule(dynamic, 8) if (n >= kParallelMinRows / 4)
  for (std::ptrdiff_t c = 0; c < count; ++c) {
    const Edge e = inst.candidates[static_cast<std::size_t>(c)];
    const double w = metric(e);
    Bitset& set = inst.sets[static_cast<std::size_t>(c)];
    std::size_t idx = 0;
    for (Vertex x = 0; x < n; ++x) {
      const double xa = d(x, e.u) + w;
      const double xb = d(x, e.v) + w;
      for (Vertex y = x + 1; y < n; ++y, ++idx) {
        const double with_e = std::min({d(x, y), xa + d(e.v, y), xb + d(e.u, y)});
        if (with_e <= slack * metric(x, y)) set.set(idx);
      }
    }
  }
  return inst;
}

CoverResult greedy_set_cover(const SetCoverInstance& instance) {
  CoverResult result;
  Bitset covered = instance.baseline.size() == instance.universe_size
                       ? instance.baseline
                       : Bitset(instance.universe_size);
  const auto count = static_cast<std::ptrdiff_t>(instance.sets.size());
  std::vector<char> used(instance.sets.size(), 0);

  while (!covered.all()) {
    std::size_t best_gain = 0;
    std::size_t best_index = 0;
#pragma omp parallel if (instance.sets.size() >= 256)
    {
      std::size_t local_gain = 0;
      std::size_t local_index = 0;
#pragma omp for schedule(static) nowait
      for (std::ptrdiff_t s = 0; s < count; ++s) {
        const auto i = static_cast<std::size_t>(s);
        if (used[i]) continue;
        const std::size_t gain = instance.sets[i].count_without(covered);
        if (gain > local_gain) {
          local_gain = gain;
          local_index = i;
        }
      }
#pragma omp critical(dilaug_cover_argmax)
      {
        if (local_gain > best_gain || (local_gain == best_gain && local_gain > 0 &&
                                       local_index < best_index)) {
          best_gain = local_gain;
          best_index = local_index;
        }
      }
    }
    if (best_gain == 0) break;
    used[best_index] = 1;
    covered |= instance.sets[best_index];
    result.chosen_indices.push_back(best_index);
  }

  result.covered_all = covered.all();
  if (instance.candidates.size() == instance.sets.size()) {
    for (std::size_t i : result.chosen_indices) result.chosen.push_back(instance.candidates[i]);
  }
  return result;
}

double cover_threshold(std::size_t k, std::size_t n) {
  const double kk = static_cast<double>(k);
  return 2.0 * kk * kk * (2.0 * std::log(static_cast<double>(n)) + 1.0);
}

AugmentationResult setcover_search(const MetricGraph& g, std::size_t k, double delta,
                                   double t_limit) {
  if (k < 1) throw Error(ErrorCode::InvalidParam, "k must be >= 1");
  const double threshold = cover_threshold(k, g.size());
  auto accepts = [threshold](const CoverResult& c) {
    return c.covered_all && static_cast<double>(c.chosen.size()) <= threshold;
  };

  const GridBracket bracket = grid_search(
      [&](double t) {
        const CoverResult cover = greedy_set_cover(build_instance(g, t));
        return Probe{t, cover.chosen.size(), accepts(cover)};
      },
      delta, t_limit);

  AugmentationResult result;
  result.added = greedy_set_cover(build_instance(g, bracket.t_accept)).chosen;
  result.t_level = bracket.t_accept;
  result.t_rejected = bracket.t_reject;
  result.t_achieved = dilation(g.with_added(result.added)).dilation;
  result.probes = bracket.probes;
  result.cover_threshold = threshold;
  return result;
}

}  // namespace dilaug
