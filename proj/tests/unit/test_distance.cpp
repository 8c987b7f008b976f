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

#include <doctest.h>

#include <random>

#include "../support.hpp"
#include "dilaug/distance.hpp"
#include "dilaug/generators.hpp"

using namespace dilaug;
using testing::close_rel;
using testing::line_metric;

TEST_CASE("apsp basics") {
  auto m = line_metric({0, 1, 3});
  SUBCASE("edgeless") {
    const auto d = apsp(MetricGraph(m, {}));
    for (Vertex i = 0; i < 3; ++i) {
      for (Vertex j = 0; j < 3; ++j) CHECK(d(i, j) == (i == j ? 0.0 : kInf));
    }
    const auto rep = dilation(MetricGraph(m, {}));
    CHECK(rep.dilation == kInf);
  }
  SUBCASE("complete graph matches the metric") {
    const MetricGraph g(m, {{0, 1}, {0, 2}, {1, 2}});
    const auto d = apsp(g);
    for (Vertex i = 0; i < 3; ++i) {
      for (Vertex j = 0; j < 3; ++j) CHECK(d(i, j) == m->operator()(i, j));
    }
    CHECK(dilation(g).dilation == 1.0);
  }
  SUBCASE("single points and pairs") {
    CHECK(dilation(MetricGraph(line_metric({0}), {})).dilation == 1.0);
    CHECK(dilation(MetricGraph(line_metric({0, 2}), {{0, 1}})).dilation == 1.0);
  }
}

TEST_CASE("dilation witness") {
  // 0 - 1 - 2 on a line, plus the point 2 far off at x = 10 reached from 0.
  auto m = line_metric({0, 1, 2, 10});
  const MetricGraph g(m, {{0, 1}, {1, 2}, {0, 3}});
  const auto rep = dilation(g);
  // d_G(2, 3) = 2 + 10 = 12 against d_M = 8.
  CHECK(rep.dilation == doctest::Approx(1.5));
  REQUIRE(rep.witness);
  CHECK(*rep.witness == Edge{2, 3});
}

TEST_CASE("apsp agrees with independent dijkstra and the reference kernel") {
  const auto lb = gen_girth_lowerbound(cages::k33(), 1);
  const auto d = apsp(lb.graph);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Vertex> pick(0, lb.graph.size() - 1);
  for (int rep = 0; rep < 20; ++rep) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    CHECK(close_rel(d(a, b), testing::dijkstra_from(lb.graph, a)[b], 1e-12));
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const MetricGraph g = testing::random_instance(seed, 8 + seed % 60, 0.2, seed % 3 != 0);
    const auto fast = apsp(g);
    const auto slow = reference::apsp(g);
    for (Vertex a = 0; a < g.size(); ++a) {
      for (Vertex b = 0; b < g.size(); ++b) CHECK(close_rel(fast(a, b), slow(a, b), 1e-12));
    }
    const auto r1 = dilation(g, fast);
    const auto r2 = reference::dilation(g.metric(), slow);
    CHECK(close_rel(r1.dilation, r2.dilation, 1e-12));
    CHECK(close_rel(r1.dilation, testing::naive_dilation(g), 1e-12));
    CHECK(r1.dilation >= 1.0);
  }
}

TEST_CASE("incremental update") {
  SUBCASE("an implied edge leaves the matrix alone") {
    auto m = line_metric({0, 1, 2});
    const MetricGraph g(m, {{0, 1}, {1, 2}});
    const auto d = apsp(g);
    CHECK(incremental_update(d, {0, 2}, 2.0) == d);
  }
  SUBCASE("bridging two components") {
    auto m = line_metric({0, 1, 5, 6});
    const MetricGraph g(m, {{0, 1}, {2, 3}});
    const auto d = incremental_update(apsp(g), {1, 2}, 4.0);
    for (Vertex a : {0, 1}) {
      for (Vertex b : {2, 3}) CHECK(d(a, b) < kInf);
    }
    CHECK(d == apsp(g.with_added(std::vector<Edge>{{1, 2}})));
  }
  SUBCASE("random insertion sequences equal recomputation") {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      // Large enough on some seeds to take the threaded path.
      const std::size_t n = seed % 5 == 0 ? 60 : 10;
      MetricGraph g = testing::random_instance(seed, n, 0.1, false);
      DistanceMatrix d = apsp(g);
      DistanceMatrix d_ref = d;
      auto absent = g.absent_edges();
      std::shuffle(absent.begin(), absent.end(), rng);
      for (std::size_t i = 0; i < 50 && i < absent.size(); ++i) {
        const Edge e = absent[i];
        relax_edge(d, e, g.metric()(e));
        reference::relax_edge(d_ref, e, g.metric()(e));
        g = g.with_added(std::vector<Edge>{e});
      }
      const auto full = reference::apsp(g);
      bool same = true;
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
          same = same && close_rel(d(a, b), full(a, b), 1e-12) &&
                 close_rel(d_ref(a, b), full(a, b), 1e-12);
        }
      }
      CHECK(same);
    }
  }
}

TEST_CASE("adding edges never increases distances or dilation") {
  std::mt19937_64 rng(2);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    MetricGraph g = testing::random_instance(seed, 9, 0.25);
    auto absent = g.absent_edges();
    std::shuffle(absent.begin(), absent.end(), rng);
    auto before = apsp(g);
    double t = dilation(g, before).dilation;
    for (std::size_t i = 0; i < 5 && i < absent.size(); ++i) {
      g = g.with_added(std::vector<Edge>{absent[i]});
      const auto after = apsp(g);
      for (Vertex a = 0; a < 9; ++a) {
        for (Vertex b = 0; b < 9; ++b) CHECK(after(a, b) <= before(a, b));
      }
      const double t2 = dilation(g, after).dilation;
      CHECK(t2 <= t);
      before = after;
      t = t2;
    }
  }
}

TEST_CASE("dilation 1 exactly when every pair is at metric distance") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const MetricGraph g = testing::random_instance(seed, 7, 0.5);
    const auto d = apsp(g);
    bool tight = true;
    for (Vertex a = 0; a < 7; ++a) {
      for (Vertex b = 0; b < 7; ++b) tight = tight && d(a, b) == g.metric()(a, b);
    }
    CHECK((dilation(g, d).dilation == 1.0) == tight);
  }
}

TEST_CASE("gadget dilation is witnessed on a host edge") {
  for (std::size_t k : {1u, 2u}) {
    const auto sc = gen_setcover_gadget(3, {{0}, {1, 2}}, k);
    for (const auto& extra : {std::vector<Edge>{}, sc.set_edges({0}), sc.set_edges({1})}) {
      const MetricGraph g = sc.graph.with_added(extra);
      const auto rep = dilation(g);
      REQUIRE(rep.witness);
      const Edge w = *rep.witness;
      bool host_edge = false;
      for (const auto& he : g.metric().host_edges()) host_edge = host_edge || Edge::make(he.u, he.v) == w;
      CHECK(host_edge);
    }
  }
}
