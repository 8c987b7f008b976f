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

#include <algorithm>

#include "../support.hpp"
#include "dilaug/distance.hpp"
#include "dilaug/error.hpp"
#include "dilaug/generators.hpp"
#include "dilaug/oracle.hpp"

using namespace dilaug;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("girth lower-bound family") {
  SUBCASE("K3,3") {
    const auto lb = gen_girth_lowerbound(cages::k33(), 1);
    CHECK(lb.graph.size() == 60);
    CHECK(lb.k == 5);
    CHECK(lb.epsilon == doctest::Approx(1.0 / 24.0));
    CHECK(lb.f == doctest::Approx(8.0 / 5.0));
    CHECK(lb.m1.size() == 54);
    CHECK(lb.m2.size() == 5);
    CHECK(lb.m3.size() == 9);
    CHECK(std::vector<Edge>(lb.graph.edges().begin(), lb.graph.edges().end()) ==
          [&] {
            auto s = lb.m1;
            std::sort(s.begin(), s.end());
            return s;
          }());
    for (std::size_t j = 1; j <= 9; ++j) {
      const auto [a, b] = lb.source.edges[j - 1];
      CHECK(lb.m3[j - 1] == Edge::make(lb.u(a + 1, j), lb.u(b + 1, j)));
    }
    const auto& metric = lb.graph.metric();
    for (const Edge& e : lb.m1) CHECK(metric(e) == 1.0);
    for (const Edge& e : lb.m2) CHECK(metric(e) == doctest::Approx(2.0 * lb.epsilon));
    for (const Edge& e : lb.m3) CHECK(metric(e) == doctest::Approx(lb.epsilon));
    CHECK(dilation(lb.graph.with_added(lb.m2)).dilation <= lb.t_upper() * (1 + 1e-9));
  }
  SUBCASE("Heawood, r = 2") {
    const auto lb = gen_girth_lowerbound(cages::heawood(), 2);
    CHECK(lb.k == 13);
    CHECK(lb.h_edges() == 21);
    CHECK(lb.graph.size() == 14 * 22);
    CHECK(dilation(lb.graph.with_added(lb.m2)).dilation <= lb.t_upper() * (1 + 1e-9));
  }
  SUBCASE("Tutte-Coxeter, r = 3") {
    const auto lb = gen_girth_lowerbound(cages::tutte_coxeter(), 3);
    CHECK(lb.k == 29);
    CHECK(lb.graph.size() == 30 * 46);
  }
  SUBCASE("girth checks") {
    // A single edge has no cycle, so it clears any girth requirement.
    CHECK_NOTHROW(gen_girth_lowerbound(UnweightedGraph{2, {{0, 1}}}, 1));
    const UnweightedGraph triangle{3, {{0, 1}, {1, 2}, {0, 2}}};
    CHECK(code_of([&] { gen_girth_lowerbound(triangle, 1); }) == ErrorCode::GirthTooSmall);
    CHECK(code_of([] { gen_girth_lowerbound(cages::k33(), 2); }) == ErrorCode::GirthTooSmall);
    CHECK(code_of([] { gen_girth_lowerbound(UnweightedGraph{3, {{0, 1}}}, 1); }) ==
          ErrorCode::InvalidInput);
    CHECK(code_of([] { gen_girth_lowerbound(UnweightedGraph{2, {{0, 1}, {0, 1}}}, 1); }) ==
          ErrorCode::InvalidInput);
  }
  SUBCASE("labels") {
    const auto lb = gen_girth_lowerbound(cages::k33(), 1);
    const auto labels = lb.labels();
    CHECK(labels.vertex_names[lb.u(2, 3)] == "u[2,3]");
    REQUIRE(labels.edge_class("M3"));
    CHECK(*labels.edge_class("M3") == lb.m3);
    CHECK(labels.reference_solution == lb.m2);
    CHECK(labels.param("f") == doctest::Approx(lb.f));
    CHECK_FALSE(labels.edge_class("M9"));
  }
}

TEST_CASE("set-cover gadget") {
  SUBCASE("three elements, two disjoint sets") {
    const auto sc = gen_setcover_gadget(3, {{0}, {1, 2}}, 1);
    CHECK(sc.graph.size() == 18);
    CHECK(sc.m1.size() == 6);
    CHECK(sc.m2.size() == 2);
    CHECK(sc.m3.size() == 6);
    CHECK(sc.m4.size() == 6);
    CHECK(sc.m5.size() == 2);
    CHECK(sc.m6.size() == 2);
    // The two sets share no element, so one bridge joins their gadgets.
    CHECK(sc.bridges == std::vector<Edge>{Edge::make(sc.w(1), sc.w(2))});
    const auto& metric = sc.graph.metric();
    for (const Edge& e : sc.m1) CHECK(metric(e) == 1.0);
    for (const Edge& e : sc.m2) CHECK(metric(e) == 1.0);
    for (const auto* cls : {&sc.m3, &sc.m4, &sc.m5, &sc.m6}) {
      for (const Edge& e : *cls) CHECK(metric(e) == 8.0);
    }
    for (const Edge& e : sc.m1) CHECK_FALSE(sc.graph.has_edge(e.u, e.v));
    for (const Edge& e : sc.m2) CHECK_FALSE(sc.graph.has_edge(e.u, e.v));
    CHECK(sc.graph.edges().size() == 6 + 6 + 2 + 2 + 1);
    const auto labels = sc.labels();
    CHECK(labels.vertex_names[sc.u_prime(2, 1)] == "u'[2,1]");
    CHECK(labels.vertex_names[sc.w(2)] == "w[2]");
  }
  SUBCASE("overlapping sets need no bridge") {
    const auto sc = gen_setcover_gadget(3, {{0, 1}, {1, 2}}, 1);
    CHECK(sc.bridges.empty());
    CHECK(sc.graph.edges().size() == 4 + 4 + 4 + 4 + 2 + 2);
  }
  SUBCASE("bridges do not shorten M1 or M2 pairs") {
    const auto sc = gen_setcover_gadget(3, {{0}, {1, 2}}, 1);
    const auto overlap = gen_setcover_gadget(1, {{0}}, 1);
    const auto& m = sc.graph.metric();
    // Within one set gadget: v v' via w is 4/eps, u u' via v, w, v' is 8/eps.
    const auto d = apsp(sc.graph);
    for (const Edge& e : sc.m2) CHECK(d(e) == doctest::Approx(16.0));
    for (const Edge& e : sc.m1) CHECK(d(e) == doctest::Approx(32.0));
    CHECK(m(sc.v(1), sc.v(2)) == doctest::Approx(24.0));
    CHECK(apsp(overlap.graph)(overlap.m1[0]) == doctest::Approx(32.0));
  }
  SUBCASE("errors") {
    CHECK(code_of([] { gen_setcover_gadget(2, {{0}, {}}, 1); }) == ErrorCode::EmptySet);
    CHECK(code_of([] { gen_setcover_gadget(2, {{0}}, 1); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { gen_setcover_gadget(2, {{0, 5}}, 1); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { gen_setcover_gadget(1, {{0}}, 1, 1.0); }) == ErrorCode::InvalidParam);
    CHECK(code_of([] { gen_setcover_gadget(1, {{0}}, 1, 0.0); }) == ErrorCode::InvalidParam);
  }
  SUBCASE("NO variant keeps some pair at 8/eps") {
    const auto sc = gen_setcover_gadget(2, {{0}, {1}}, 1);
    for (const Edge& e : sc.graph.absent_edges()) {
      CHECK(dilation(sc.graph.with_added(std::vector<Edge>{e})).dilation >= 32.0 * (1 - 1e-9));
    }
  }
}

TEST_CASE("random instances") {
  RandomInstanceOptions o;
  o.n = 8;
  o.edge_density = 1.0;
  const auto complete = gen_random(o);
  CHECK(complete.edges().size() == 28);
  CHECK(dilation(complete).dilation == 1.0);

  for (auto kind : {RandomMetricKind::Euclidean, RandomMetricKind::HostGraph}) {
    o.kind = kind;
    o.edge_density = 0.2;
    o.seed = 42;
    CHECK(gen_random(o) == gen_random(o));
    o.spanning_tree = true;
    CHECK(gen_random(o).component_count() == 1);
    o.spanning_tree = false;
  }
  o.n = 1;
  CHECK_THROWS_AS(gen_random(o), Error);
}
