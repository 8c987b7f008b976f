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
#include <set>

#include "dilaug/error.hpp"
#include "dilaug/generators.hpp"
#include "dilaug/girth.hpp"

using namespace dilaug;

namespace {

UnweightedGraph cycle_graph(std::size_t n) {
  UnweightedGraph h{n, {}};
  for (std::size_t i = 0; i < n; ++i) h.edges.push_back({i, (i + 1) % n});
  return h;
}

// Checks that `c` is a simple closed walk over distinct edges of `h`.
bool is_simple_cycle(const UnweightedGraph& h, const Cycle& c) {
  if (c.vertices.size() != c.edge_ids.size() || c.vertices.empty()) return false;
  std::set<Vertex> seen(c.vertices.begin(), c.vertices.end());
  std::set<std::size_t> ids(c.edge_ids.begin(), c.edge_ids.end());
  if (seen.size() != c.vertices.size() || ids.size() != c.edge_ids.size()) return false;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const Vertex a = c.vertices[i];
    const Vertex b = c.vertices[(i + 1) % c.vertices.size()];
    const auto [x, y] = h.edges[c.edge_ids[i]];
    if (!((x == a && y == b) || (x == b && y == a))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("girth of small graphs") {
  CHECK(girth(cycle_graph(3)) == 3u);
  CHECK(girth(cycle_graph(7)) == 7u);
  CHECK_FALSE(girth(UnweightedGraph{5, {{0, 1}, {1, 2}, {3, 4}}}));
  CHECK_FALSE(girth(UnweightedGraph{4, {}}));
  CHECK(girth(UnweightedGraph{2, {{0, 1}, {1, 0}}}) == 2u);
  CHECK(girth(cages::k33()) == 4u);
  CHECK(girth(cages::heawood()) == 6u);
  CHECK(girth(cages::tutte_coxeter()) == 8u);
  CHECK(cages::heawood().edges.size() == 21);
  CHECK(cages::tutte_coxeter().edges.size() == 45);
}

TEST_CASE("fast girth matches the edge-removal reference") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = 2 + rep % 70;
    const std::size_t m = rep % 5 == 0 ? n + 3 : n;
    UnweightedGraph h{n, {}};
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    while (h.edges.size() < m) {
      const Vertex a = pick(rng);
      const Vertex b = pick(rng);
      if (a != b) h.edges.push_back({a, b});  // parallel edges allowed
    }
    const auto fast = girth(h);
    CHECK(fast == reference::girth(h));
    const auto c = shortest_cycle(h);
    CHECK(c.has_value() == fast.has_value());
    if (c) {
      CHECK(c->edge_ids.size() == *fast);
      CHECK(is_simple_cycle(h, *c));
    }
  }
}

TEST_CASE("girth lemma sampling") {
  CHECK_THROWS_AS(check_girth_lemma(10, 1, 5, 1), Error);
  const auto a = check_girth_lemma(20, 2, 100, 1);
  CHECK(a.edges == 91);
  REQUIRE(a.max_girth);
  CHECK(*a.max_girth <= 4);
  const auto b = check_girth_lemma(50, 3, 100, 2);
  REQUIRE(b.max_girth);
  CHECK(*b.max_girth <= 6);
  // Same seed, same samples.
  CHECK(check_girth_lemma(30, 2, 20, 9).max_girth == check_girth_lemma(30, 2, 20, 9).max_girth);
}
