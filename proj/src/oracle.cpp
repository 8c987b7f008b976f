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

#include "dilaug/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <sstream>
#include <string>

#include "dilaug/distance.hpp"
#include "dilaug/error.hpp"
#include "dilaug/parallel.hpp"

namespace dilaug {

namespace {

std::vector<Edge> lexicographic_absent(const MetricGraph& g) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (!g.has_edge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

double binomial(std::size_t m, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    c = c * static_cast<double>(m - i) / static_cast<double>(i + 1);
  }
  return c;
}

struct Best {
  double t = kInf;
  std::vector<std::size_t> picks;
  bool found = false;

  void offer(double value, const std::vector<std::size_t>& candidate) {
    // Strict: the first subset visited (lexicographic) wins ties.
    if (!found || value < t) {
      t = value;
      picks = candidate;
      found = true;
    }
  }
};

OptimalSolution finish(const MetricGraph& g, std::vector<Edge> edges, double t, bool optimal) {
  std::sort(edges.begin(), edges.end());
  MetricGraph g_star = g.with_added(edges);
  return OptimalSolution{t, std::move(edges), std::move(g_star), optimal};
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

OptimalSolution brute_force_optimum(const MetricGraph& g, std::size_t k, double max_subsets) {
  if (k < 1) throw Error(ErrorCode::InvalidParam, "k must be >= 1");
  const std::vector<Edge> candidates = lexicographic_absent(g);
  const std::size_t m = candidates.size();
  const std::size_t kk = std::min(k, m);
  const double subsets = binomial(m, kk);
  if (subsets > max_subsets) {
    throw Error(ErrorCode::TooLarge, "brute force over " + fmt(subsets) +
                                         " subsets exceeds the guard of " + fmt(max_subsets));
  }

  const DistanceMatrix base = apsp(g);
  const MetricSpace& metric = g.metric();
  if (kk == 0) return finish(g, {}, dilation(metric, base).dilation, true);

  const std::size_t first_slots = m - kk + 1;
  std::vector<Best> per_first(first_slots);
  const auto count = static_cast<std::ptrdiff_t>(first_slots);

#pragma omp parallel for schedule(dynamic, 1) if (first_slots > 1 && subsets > 256)
  for (std::ptrdiff_t f = 0; f < count; ++f) {
    const auto first = static_cast<std::size_t>(f);
    std::vector<DistanceMatrix> levels(kk + 1);
    std::vector<std::size_t> picks{first};
    levels[1] = incremental_update(base, candidates[first], metric(candidates[first]));
    Best& best = per_first[first];

    std::function<void(std::size_t)> extend = [&](std::size_t depth) {
      if (depth == kk) {
        best.offer(dilation(metric, levels[depth]).dilation, picks);
        return;
      }
      const std::size_t remaining = kk - depth;
      for (std::size_t next = picks.back() + 1; next + remaining <= m; ++next) {
        levels[depth + 1] = levels[depth];
        relax_edge(levels[depth + 1], candidates[next], metric(candidates[next]));
        picks.push_back(next);
        extend(depth + 1);
        picks.pop_back();
      }
    };
    extend(1);
  }

  Best overall;
  for (const Best& b : per_first) {
    if (b.found) overall.offer(b.t, b.picks);
  }
  std::vector<Edge> edges;
  for (std::size_t i : overall.picks) edges.push_back(candidates[i]);
  return finish(g, std::move(edges), overall.t, true);
}

OptimalSolution solution_from_edges(const MetricGraph& g, std::vector<Edge> edges) {
  for (Edge& e : edges) e = Edge::make(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  MetricGraph g_star = g.with_added(edges);
  const double t = dilation(g_star).dilation;
  return OptimalSolution{t, std::move(edges), std::move(g_star), false};
}

std::vector<Vertex> shortest_path(const MetricGraph& g, Vertex from, Vertex to) {
  const std::size_t n = g.size();
  constexpr Vertex kNone = static_cast<Vertex>(-1);
  std::vector<std::vector<std::pair<Vertex, double>>> adj(n);
  for (const Edge& e : g.edges()) {
    const double w = g.weight(e);
    adj[e.u].push_back({e.v, w});
    adj[e.v].push_back({e.u, w});
  }
  std::vector<double> dist(n, kInf);
  std::vector<Vertex> pred(n, kNone);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[from] = 0.0;
  heap.push({0.0, from});
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (const auto& [y, w] : adj[x]) {
      const double nd = d + w;
      if (nd < dist[y]) {
        dist[y] = nd;
        pred[y] = x;
        heap.push({nd, y});
      } else if (nd == dist[y] && x < pred[y]) {
        pred[y] = x;
      }
    }
  }
  if (dist[to] == kInf) return {};
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(pred[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

UnweightedGraph GirthGraph::as_graph() const {
  UnweightedGraph h{vertex_count, {}};
  for (const auto& e : edges) h.edges.push_back({e.a, e.b});
  return h;
}

GirthGraph girth_graph_from_paths(std::span<const Edge> s_star,
                                  std::vector<std::vector<Vertex>> paths,
                                  const MetricSpace* metric) {
  std::vector<Edge> sorted(s_star.begin(), s_star.end());
  for (Edge& e : sorted) e = Edge::make(e.u, e.v);
  std::sort(sorted.begin(), sorted.end());

  GirthGraph h;
  h.vertex_count = 2 * sorted.size();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    GreedyPath info;
    info.vertices = std::move(paths[i]);
    std::optional<std::size_t> entry;
    std::size_t exit = 0;
    for (std::size_t p = 0; p + 1 < info.vertices.size(); ++p) {
      const Vertex x = info.vertices[p];
      const Vertex y = info.vertices[p + 1];
      const Edge e = Edge::make(x, y);
      const double len = metric ? (*metric)(e) : 0.0;
      const auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
      if (it != sorted.end() && *it == e) {
        const auto q = static_cast<std::size_t>(it - sorted.begin());
        if (!entry) entry = 2 * q + (x == e.u ? 0 : 1);
        exit = 2 * q + (y == e.u ? 0 : 1);
        info.optimal_length += len;
      } else {
        info.graph_length += len;
      }
    }
    if (entry) {
      h.edges.push_back({i, *entry, exit});
    } else {
      info.outcome = PathOutcome::NoOptEdgeOnPath;
    }
    h.paths.push_back(std::move(info));
  }

  if (auto cycle = shortest_cycle(h.as_graph())) {
    h.girth = cycle->edge_ids.size();
    for (std::size_t id : cycle->edge_ids) h.cycle.push_back(h.edges[id].greedy_index);
    std::sort(h.cycle.begin(), h.cycle.end());
  }
  return h;
}

GirthGraph build_girth_graph(const MetricGraph& g, const OptimalSolution& opt,
                             const GreedyTrace& trace) {
  (void)g;
  std::vector<std::vector<Vertex>> paths;
  paths.reserve(trace.added.size());
  for (const auto& step : trace.added) {
    paths.push_back(shortest_path(opt.g_star, step.edge.u, step.edge.v));
  }
  return girth_graph_from_paths(opt.s_star, std::move(paths), &opt.g_star.metric());
}

std::string_view to_string(LemmaBranch branch) noexcept {
  switch (branch) {
    case LemmaBranch::NotApplicable: return "not_applicable";
    case LemmaBranch::DirectBound: return "direct_bound";
    case LemmaBranch::NoCycle: return "no_cycle";
    case LemmaBranch::Case1: return "case1";
    case LemmaBranch::Case2: return "case2";
  }
  return "unknown";
}

MainLemmaReport verify_main_lemma(const MetricGraph& g, const OptimalSolution& opt, double t,
                                  const GreedyTrace& trace, const BicriteriaParams& params) {
  MainLemmaReport report;
  report.t = t;
  report.t_star = opt.t_star;
  const std::size_t needed = params.edge_cap + 1;
  if (trace.added.size() < needed) return report;

  auto require = [&report](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::VerificationFailure, "violated: " + what);
    report.checks.push_back(what);
  };

  GreedyTrace used;
  used.added.assign(trace.added.begin(), trace.added.begin() + static_cast<std::ptrdiff_t>(needed));
  used.halt = GreedyHalt::Capped;
  report.greedy_edges_used = needed;
  report.girth_graph = build_girth_graph(g, opt, used);
  const GirthGraph& h = report.girth_graph;
  const MetricSpace& metric = g.metric();
  const double t_star = opt.t_star;

  for (std::size_t i = 0; i < needed; ++i) {
    const auto& path = h.paths[i];
    require(!path.vertices.empty(), "a_" + std::to_string(i + 1) + " is connected in G*");
    if (path.outcome != PathOutcome::NoOptEdgeOnPath) continue;
    // d_{G*}(a_i) = d_G(a_i) >= d_{G_{i-1}}(a_i) > t d_M(a_i)
    const auto& step = used.added[i];
    const double through_g_star = path.graph_length;
    require(step.graph_distance > t * step.length,
            "d_{G_{i-1}}(a_" + std::to_string(i + 1) + ") > t d_M");
    require(leq_tol(step.graph_distance, through_g_star),
            "d_{G_{i-1}}(a_" + std::to_string(i + 1) + ") <= d_{G*}(a_" +
                std::to_string(i + 1) + ")");
    require(leq_tol(through_g_star, t_star * step.length),
            "d_{G*}(a_" + std::to_string(i + 1) + ") <= t* d_M");
    require(leq_tol(t, t_star), "t <= t* (greedy path avoids S*)");
    report.branch = LemmaBranch::DirectBound;
    report.within_cycle_bound = true;
    report.within_g_bound = leq_tol(t, params.g * t_star);
    return report;
  }

  if (!h.girth) {
    report.branch = LemmaBranch::NoCycle;
    return report;
  }

  const std::vector<std::size_t>& cycle = h.cycle;
  const std::size_t size_i = cycle.size();
  const std::size_t closing = cycle.back();
  report.cycle = cycle;
  report.cycle_length = size_i;
  report.closing_index = closing;
  const auto& a_i = used.added[closing];

  // Path between the endpoints of a_i using G-edges of the cycle members'
  // G*-paths plus the other cycle members' greedy edges.
  std::vector<Edge> allowed;
  for (std::size_t j : cycle) {
    const auto& verts = h.paths[j].vertices;
    for (std::size_t p = 0; p + 1 < verts.size(); ++p) {
      const Edge e = Edge::make(verts[p], verts[p + 1]);
      if (g.has_edge(e.u, e.v)) allowed.push_back(e);
    }
    if (j != closing) allowed.push_back(used.added[j].edge);
  }
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  std::vector<WeightedEdge> weighted;
  for (const Edge& e : allowed) weighted.push_back({e.u, e.v, metric(e)});
  const DistanceMatrix within = shortest_paths(g.size(), weighted);
  const double path_len = within(a_i.edge);
  report.path_length = path_len;
  report.path_lower_bound = t * a_i.length;
  report.path_upper_bound = static_cast<double>(size_i) * t_star * a_i.length;

  require(path_len < kInf, "a path joins the endpoints of a_i within the cycle's edges");
  require(leq_tol(a_i.graph_distance, path_len), "L >= d_{G_{i-1}}(a_i)");
  require(leq_tol(report.path_lower_bound, path_len), "L >= t d_M(a_i)");

  const double keep = 1.0 - 1.0 / static_cast<double>(size_i);
  std::optional<std::size_t> case1;
  for (std::size_t j : cycle) {
    if (h.paths[j].optimal_length < keep * used.added[j].length) {
      case1 = j;
      break;
    }
  }

  if (case1) {
    const std::size_t j = *case1;
    const auto& a_j = used.added[j];
    const auto& pj = h.paths[j];
    report.case1_index = j;
    report.branch = LemmaBranch::Case1;

    std::vector<Edge> prefix;
    for (std::size_t p = 0; p < j; ++p) prefix.push_back(used.added[p].edge);
    const DistanceMatrix before = apsp(g.with_added(prefix));
    for (std::size_t p = 0; p + 1 < pj.vertices.size(); ++p) {
      const Edge s = Edge::make(pj.vertices[p], pj.vertices[p + 1]);
      if (g.has_edge(s.u, s.v)) continue;
      require(metric(s) < a_j.length, "d_M(s) < d_M(a_j) for s on the path of a_j");
      require(leq_tol(before(s), t * metric(s)), "d_{G_{j-1}}(s) <= t d_M(s)");
    }
    const double g_star_len = pj.graph_length + pj.optimal_length;
    require(leq_tol(a_j.graph_distance, g_star_len + t * pj.optimal_length),
            "d_{G_{j-1}}(a_j) <= d_{G*}(a_j) + t total(S* on path)");
    require(leq_tol(g_star_len, t_star * a_j.length), "d_{G*}(a_j) <= t* d_M(a_j)");
  } else {
    report.branch = LemmaBranch::Case2;
    double bound = 0.0;
    for (std::size_t j : cycle) {
      bound += h.paths[j].graph_length;
      if (j != closing) bound += used.added[j].length;
      require(leq_tol(h.paths[j].graph_length + h.paths[j].optimal_length,
                      t_star * used.added[j].length),
              "d_{G*}(a_j) <= t* d_M(a_j)");
      require(leq_tol(used.added[j].length, a_i.length), "d_M(a_j) <= d_M(a_i)");
    }
    require(leq_tol(path_len, bound), "L <= total(G on paths) + total(other greedy edges)");
    require(leq_tol(bound, report.path_upper_bound), "L <= |I| t* d_M(a_i)");
  }

  report.within_cycle_bound = leq_tol(t, static_cast<double>(size_i) * t_star);
  require(report.within_cycle_bound, "t <= |I| t*");
  report.within_g_bound = leq_tol(t, params.g * t_star);
  return report;
}

namespace reference {

OptimalSolution brute_force_optimum(const MetricGraph& g, std::size_t k) {
  const std::vector<Edge> candidates = lexicographic_absent(g);
  const std::size_t m = candidates.size();
  const std::size_t kk = std::min(k, m);
  std::vector<std::size_t> idx(kk);
  for (std::size_t i = 0; i < kk; ++i) idx[i] = i;

  Best best;
  while (true) {
    std::vector<Edge> chosen;
    for (std::size_t i : idx) chosen.push_back(candidates[i]);
    const MetricGraph aug = g.with_added(chosen);
    best.offer(reference::dilation(aug.metric(), reference::apsp(aug)).dilation, idx);

    // Next combination in lexicographic order.
    std::size_t pos = kk;
    while (pos > 0 && idx[pos - 1] == m - kk + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < kk; ++i) idx[i] = idx[i - 1] + 1;
  }
  std::vector<Edge> edges;
  for (std::size_t i : best.picks) edges.push_back(candidates[i]);
  return finish(g, std::move(edges), best.t, true);
}

}  // namespace reference

}  // namespace dilaug
