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

#include "dilaug/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "dilaug/error.hpp"

namespace dilaug {

const std::vector<Edge>* InstanceLabels::edge_class(const std::string& name) const {
  for (const auto& [key, edges] : edge_classes) {
    if (key == name) return &edges;
  }
  return nullptr;
}

std::optional<double> InstanceLabels::param(const std::string& name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  return std::nullopt;
}

namespace cages {

UnweightedGraph k33() {
  UnweightedGraph h{6, {}};
  for (Vertex a = 0; a < 3; ++a) {
    for (Vertex b = 3; b < 6; ++b) h.edges.push_back({a, b});
  }
  return h;
}

namespace {

UnweightedGraph from_lcf(std::size_t n, const std::vector<int>& pattern) {
  std::set<std::pair<Vertex, Vertex>> edges;
  const auto nn = static_cast<int>(n);
  for (int i = 0; i < nn; ++i) {
    const int next = (i + 1) % nn;
    edges.insert({std::min(i, next), std::max(i, next)});
    const int jump = ((i + pattern[static_cast<std::size_t>(i) % pattern.size()]) % nn + nn) % nn;
    edges.insert({std::min(i, jump), std::max(i, jump)});
  }
  UnweightedGraph h{n, {}};
  for (const auto& [a, b] : edges) h.edges.push_back({a, b});
  return h;
}

}  // namespace

UnweightedGraph heawood() { return from_lcf(14, {5, -5}); }

UnweightedGraph tutte_coxeter() { return from_lcf(30, {-13, -9, 7, -7, 9, 13}); }

}  // namespace cages

namespace {

void require_simple_connected(const UnweightedGraph& h) {
  if (h.n < 2) throw Error(ErrorCode::InvalidInput, "H needs at least two vertices");
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<Vertex> parent(h.n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&parent](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = h.n;
  for (auto [a, b] : h.edges) {
    if (a >= h.n || b >= h.n || a == b) {
      throw Error(ErrorCode::InvalidInput, "H has a self-loop or out-of-range vertex");
    }
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw Error(ErrorCode::InvalidInput, "H has parallel edges");
    }
    const Vertex ra = find(a);
    const Vertex rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1) throw Error(ErrorCode::InvalidInput, "H must be connected");
}

}  // namespace

InstanceLabels GirthLowerBoundInstance::labels() const {
  InstanceLabels labels;
  const std::size_t n = h_vertices();
  const std::size_t m = h_edges();
  labels.vertex_names.resize(n * (m + 1));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      labels.vertex_names[u(i, j)] = "u[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
  }
  labels.edge_classes = {{"M1", m1}, {"M2", m2}, {"M3", m3}};
  labels.reference_solution = m2;
  labels.params = {{"epsilon", epsilon},
                   {"k", static_cast<double>(k)},
                   {"f", f},
                   {"r", static_cast<double>(r)},
                   {"t_upper", t_upper()}};
  return labels;
}

GirthLowerBoundInstance gen_girth_lowerbound(const UnweightedGraph& h, std::size_t r) {
  if (r < 1) throw Error(ErrorCode::InvalidParam, "r must be >= 1");
  require_simple_connected(h);
  const auto g = girth(h);
  if (g && *g < 2 * r + 2) {
    throw Error(ErrorCode::GirthTooSmall, "girth(H) = " + std::to_string(*g) +
                                              " is below 2r + 2 = " + std::to_string(2 * r + 2));
  }

  const std::size_t n = h.n;
  const std::size_t m = h.edges.size();
  const double eps = 1.0 / (4.0 * static_cast<double>(r) * static_cast<double>(n));
  auto u = [m](std::size_t i, std::size_t j) { return (i - 1) * (m + 1) + j; };

  std::vector<Edge> m1, m2, m3;
  std::vector<WeightedEdge> host;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      m1.push_back(Edge::make(u(i, 0), u(i, j)));
      host.push_back({u(i, 0), u(i, j), 1.0});
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    m2.push_back(Edge::make(u(i, 0), u(i + 1, 0)));
    host.push_back({u(i, 0), u(i + 1, 0), 2.0 * eps});
  }
  for (std::size_t j = 1; j <= m; ++j) {
    const auto [wa, wb] = h.edges[j - 1];
    const Edge e = Edge::make(u(wa + 1, j), u(wb + 1, j));
    m3.push_back(e);
    host.push_back({e.u, e.v, eps});
  }

  auto metric = std::make_shared<const MetricSpace>(
      MetricSpace::from_host_graph(n * (m + 1), std::move(host)));
  MetricGraph graph(metric, m1);
  return GirthLowerBoundInstance{std::move(graph),
                                 h,
                                 r,
                                 eps,
                                 n - 1,
                                 static_cast<double>(m - 1) / static_cast<double>(n - 1),
                                 std::move(m1),
                                 std::move(m2),
                                 std::move(m3)};
}

std::vector<Edge> SetCoverGadgetInstance::set_edges(const std::vector<std::size_t>& chosen) const {
  std::vector<Edge> out;
  for (std::size_t l : chosen) out.push_back(Edge::make(v(l + 1), v_prime(l + 1)));
  return out;
}

InstanceLabels SetCoverGadgetInstance::labels() const {
  InstanceLabels labels;
  labels.vertex_names.resize(graph.size());
  for (std::size_t i = 1; i <= element_count; ++i) {
    for (std::size_t j = 1; j <= k + 1; ++j) {
      const std::string idx = std::to_string(i) + "," + std::to_string(j) + "]";
      labels.vertex_names[u(i, j)] = "u[" + idx;
      labels.vertex_names[u_prime(i, j)] = "u'[" + idx;
    }
  }
  for (std::size_t l = 1; l <= set_count(); ++l) {
    const std::string idx = std::to_string(l) + "]";
    labels.vertex_names[v(l)] = "v[" + idx;
    labels.vertex_names[v_prime(l)] = "v'[" + idx;
    labels.vertex_names[w(l)] = "w[" + idx;
  }
  labels.edge_classes = {{"M1", m1}, {"M2", m2}, {"M3", m3},
                         {"M4", m4}, {"M5", m5}, {"M6", m6}};
  if (!bridges.empty()) labels.edge_classes.emplace_back("bridges", bridges);
  labels.params = {{"epsilon", epsilon},
                   {"k", static_cast<double>(k)},
                   {"yes_bound", yes_bound()}};
  return labels;
}

SetCoverGadgetInstance gen_setcover_gadget(std::size_t elements,
                                           const std::vector<std::vector<std::size_t>>& sets,
                                           std::size_t k, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::InvalidParam, "epsilon must lie in (0, 1)");
  }
  if (k < 1) throw Error(ErrorCode::InvalidParam, "k must be >= 1");
  if (elements < 1) throw Error(ErrorCode::InvalidParam, "need at least one element");
  std::vector<char> covered(elements, 0);
  for (std::size_t l = 0; l < sets.size(); ++l) {
    if (sets[l].empty()) {
      throw Error(ErrorCode::EmptySet, "set " + std::to_string(l + 1) + " is empty");
    }
    for (std::size_t e : sets[l]) {
      if (e >= elements) {
        throw Error(ErrorCode::InvalidInput, "set " + std::to_string(l + 1) +
                                                 " names element " + std::to_string(e + 1) +
                                                 " of " + std::to_string(elements));
      }
      covered[e] = 1;
    }
  }
  for (std::size_t e = 0; e < elements; ++e) {
    if (!covered[e]) {
      throw Error(ErrorCode::InvalidInput,
                  "element " + std::to_string(e + 1) + " is in no set; its points would be "
                  "disconnected from the metric");
    }
  }

  SetCoverGadgetInstance inst{MetricGraph(std::make_shared<const MetricSpace>(
                                              MetricSpace::from_matrix(0, {})),
                                          {}),
                              epsilon, k, elements, sets, {}, {}, {}, {}, {}, {}, {}};
  const double big = 2.0 / epsilon;
  std::vector<WeightedEdge> host;
  auto add = [&host](std::vector<Edge>& cls, Vertex a, Vertex b, double w) {
    cls.push_back(Edge::make(a, b));
    host.push_back({a, b, w});
  };
  for (std::size_t i = 1; i <= elements; ++i) {
    for (std::size_t j = 1; j <= k + 1; ++j) add(inst.m1, inst.u(i, j), inst.u_prime(i, j), 1.0);
  }
  for (std::size_t l = 1; l <= sets.size(); ++l) add(inst.m2, inst.v(l), inst.v_prime(l), 1.0);
  for (std::size_t l = 1; l <= sets.size(); ++l) {
    std::vector<std::size_t> members = sets[l - 1];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t e : members) {
      for (std::size_t j = 1; j <= k + 1; ++j) add(inst.m3, inst.u(e + 1, j), inst.v(l), big);
    }
    for (std::size_t e : members) {
      for (std::size_t j = 1; j <= k + 1; ++j) {
        add(inst.m4, inst.u_prime(e + 1, j), inst.v_prime(l), big);
      }
    }
  }
  for (std::size_t l = 1; l <= sets.size(); ++l) add(inst.m5, inst.v(l), inst.w(l), big);
  for (std::size_t l = 1; l <= sets.size(); ++l) add(inst.m6, inst.v_prime(l), inst.w(l), big);

  const std::size_t n = elements * (2 * k + 2) + 3 * sets.size();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&parent](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : host) parent[find(e.u)] = find(e.v);
  std::vector<char> seen_root(n, 0);
  std::optional<std::size_t> previous;
  for (std::size_t l = 1; l <= sets.size(); ++l) {
    const Vertex root = find(inst.w(l));
    if (seen_root[root]) continue;
    seen_root[root] = 1;
    if (previous) add(inst.bridges, inst.w(*previous), inst.w(l), big);
    previous = l;
  }

  auto metric = std::make_shared<const MetricSpace>(MetricSpace::from_host_graph(n, host));
  std::vector<Edge> g_edges;
  for (const auto* cls : {&inst.m3, &inst.m4, &inst.m5, &inst.m6, &inst.bridges}) {
    g_edges.insert(g_edges.end(), cls->begin(), cls->end());
  }
  inst.graph = MetricGraph(metric, std::move(g_edges));
  return inst;
}

MetricGraph gen_random(const RandomInstanceOptions& options) {
  const std::size_t n = options.n;
  if (n < 2) throw Error(ErrorCode::InvalidParam, "random instances need n >= 2");
  if (!(options.edge_density >= 0.0 && options.edge_density <= 1.0)) {
    throw Error(ErrorCode::InvalidParam, "edge density must lie in [0, 1]");
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto random_tree = [&rng, n]() {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> tree;
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      tree.push_back(Edge::make(order[i], order[pick(rng)]));
    }
    return tree;
  };

  std::shared_ptr<const MetricSpace> metric;
  if (options.kind == RandomMetricKind::Euclidean) {
    std::vector<std::vector<double>> points(n);
    for (auto& p : points) p = {unit(rng), unit(rng)};
    metric = std::make_shared<const MetricSpace>(MetricSpace::from_points(std::move(points)));
  } else {
    std::uniform_real_distribution<double> weight(1.0, 10.0);
    std::set<Edge> host_edges;
    for (const Edge& e : random_tree()) host_edges.insert(e);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (unit(rng) < 0.2) host_edges.insert({a, b});
      }
    }
    std::vector<WeightedEdge> host;
    for (const Edge& e : host_edges) host.push_back({e.u, e.v, weight(rng)});
    metric = std::make_shared<const MetricSpace>(MetricSpace::from_host_graph(n, std::move(host)));
  }

  std::set<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (unit(rng) < options.edge_density) edges.insert({a, b});
    }
  }
  if (options.spanning_tree) {
    for (const Edge& e : random_tree()) edges.insert(e);
  }
  return MetricGraph(std::move(metric), {edges.begin(), edges.end()});
}

}  // namespace dilaug
