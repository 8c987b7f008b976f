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

#include "dilaug/distance.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "dilaug/parallel.hpp"

namespace dilaug {

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), data_(n * n, kInf) {
  for (std::size_t i = 0; i < n; ++i) data_[i * n + i] = 0.0;
}

namespace {

struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> targets;
  std::vector<double> weights;
};

Csr build_csr(std::size_t n, std::span<const WeightedEdge> edges) {
  Csr csr;
  csr.offsets.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++csr.offsets[e.u + 1];
    ++csr.offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) csr.offsets[i + 1] += csr.offsets[i];
  csr.targets.resize(csr.offsets[n]);
  csr.weights.resize(csr.offsets[n]);
  std::vector<std::size_t> fill(csr.offsets.begin(), csr.offsets.end() - 1);
  for (const auto& e : edges) {
    csr.targets[fill[e.u]] = e.v;
    csr.weights[fill[e.u]++] = e.weight;
    csr.targets[fill[e.v]] = e.u;
    csr.weights[fill[e.v]++] = e.weight;
  }
  return csr;
}

void dijkstra_row(const Csr& csr, Vertex source, std::span<double> dist) {
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::fill(dist.begin(), dist.end(), kInf);
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (std::size_t k = csr.offsets[x]; k < csr.offsets[x + 1]; ++k) {
      const Vertex y = csr.targets[k];
      const double nd = d + csr.weights[k];
      if (nd < dist[y]) {
        dist[y] = nd;
        heap.push({nd, y});
      }
    }
  }
}

}  // namespace

DistanceMatrix shortest_paths(std::size_t n, std::span<const WeightedEdge> edges) {
  DistanceMatrix d(n);
  const Csr csr = build_csr(n, edges);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4) if (n >= kParallelMinRows)
  for (std::ptrdiff_t s = 0; s < count; ++s) {
    dijkstra_row(csr, static_cast<Vertex>(s), d.row(static_cast<Vertex>(s)));
  }
  // Sums along a path and its reverse may round differently; keep the
  // matrix exactly symmetric.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double m = std::min(d(i, j), d(j, i));
      d.at(i, j) = m;
      d.at(j, i) = m;
    }
  }
  return d;
}

DistanceMatrix apsp(const MetricGraph& g) {
  const auto edges = g.weighted_edges();
  return shortest_paths(g.size(), edges);
}

void relax_edge(DistanceMatrix& d, const Edge& e, double w) {
  const std::size_t n = d.size();
  if (!(w < d(e))) return;
  const std::vector<double> via_u(d.row(e.u).begin(), d.row(e.u).end());
  const std::vector<double> via_v(d.row(e.v).begin(), d.row(e.v).end());
  const auto count = static_cast<std::ptrdiff_t>(n);
  // Thread for row x owns cells (x, y) and (y, x) for y > x.
#pragma omp parallel for schedule(dynamic, 16) if (n >= kParallelMinRows)
  for (std::ptrdiff_t xs = 0; xs < count; ++xs) {
    const auto x = static_cast<Vertex>(xs);
    const double xu = via_u[x] + w;
    const double xv = via_v[x] + w;
    auto row = d.row(x);
    for (Vertex y = x + 1; y < n; ++y) {
      const double cand = std::min(xu + via_v[y], xv + via_u[y]);
      if (cand < row[y]) {
        row[y] = cand;
        d.at(y, x) = cand;
      }
    }
  }
}

DistanceMatrix incremental_update(const DistanceMatrix& d, const Edge& e, double w) {
  DistanceMatrix out(d);
  relax_edge(out, e, w);
  return out;
}

DilationReport dilation(const MetricSpace& metric, const DistanceMatrix& d) {
  const std::size_t n = d.size();
  DilationReport report;
  if (n < 2) return report;

  struct RowMax {
    double ratio = -1.0;
    Vertex col = 0;
  };
  std::vector<RowMax> rows(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16) if (n >= kParallelMinRows)
  for (std::ptrdiff_t xs = 0; xs < count; ++xs) {
    const auto x = static_cast<Vertex>(xs);
    RowMax best;
    const auto drow = d.row(x);
    const auto mrow = metric.row(x);
    for (Vertex y = x + 1; y < n; ++y) {
      const double ratio = drow[y] / mrow[y];
      if (ratio > best.ratio) best = {ratio, y};
    }
    rows[x] = best;
  }

  double best = -1.0;
  for (Vertex x = 0; x + 1 < n; ++x) {
    if (rows[x].ratio > best) {
      best = rows[x].ratio;
      report.witness = Edge{x, rows[x].col};
    }
  }
  report.dilation = best;
  return report;
}

DilationReport dilation(const MetricGraph& g, const DistanceMatrix& d) {
  return dilation(g.metric(), d);
}

DilationReport dilation(const MetricGraph& g) { return dilation(g.metric(), apsp(g)); }

}  // namespace dilaug
