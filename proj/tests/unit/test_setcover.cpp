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

#include <cmath>
#include <random>

#include "../support.hpp"
#include "dilaug/bitset.hpp"
#include "dilaug/distance.hpp"
#include "dilaug/generators.hpp"
#include "dilaug/oracle.hpp"
#include "dilaug/setcover.hpp"

using namespace dilaug;
using testing::line_metric;

namespace {

SetCoverInstance manual(std::size_t universe, const std::vector<std::vector<std::size_t>>& sets) {
  SetCoverInstance inst;
  inst.universe_size = universe;
  inst.baseline = Bitset(universe);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Bitset b(universe);
    for (std::size_t x : sets[i]) b.set(x);
    inst.sets.push_back(b);
    inst.candidates.push_back({i, i + 1});
  }
  return inst;
}

std::size_t exhaustive_cover(const SetCoverInstance& inst) {
  const std::size_t s = inst.sets.size();
  std::size_t best = s + 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    Bitset acc = inst.baseline;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask >> i & 1) acc |= inst.sets[i];
    }
    if (acc.all()) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

}  // namespace

TEST_CASE("pair indexing") {
  const std::size_t n = 7;
  std::size_t expected = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      CHECK(pair_index(n, u, v) == expected);
      CHECK(pair_index(n, v, u) == expected);
      CHECK(pair_at(n, expected) == Edge{u, v});
      ++expected;
    }
  }
}

TEST_CASE("greedy cover on explicit sets") {
  SUBCASE("one set covers everything") {
    const auto res = greedy_set_cover(manual(4, {{0, 1}, {0, 1, 2, 3}, {3}}));
    CHECK(res.covered_all);
    CHECK(res.chosen_indices == std::vector<std::size_t>{1});
  }
  SUBCASE("dominant first pick") {
    const auto res = greedy_set_cover(manual(6, {{0, 1, 2, 3}, {0, 1}, {2, 3}, {4, 5}}));
    CHECK(res.covered_all);
    CHECK(res.chosen_indices == std::vector<std::size_t>{0, 3});
  }
  SUBCASE("uncoverable") {
    const auto res = greedy_set_cover(manual(3, {{0}, {1}}));
    CHECK_FALSE(res.covered_all);
  }
  SUBCASE("matches the serial reference and the harmonic bound") {
    std::mt19937_64 rng(9);
    std::bernoulli_distribution coin(0.3);
    for (int rep = 0; rep < 200; ++rep) {
      const std::size_t u = 12;
      std::vector<std::vector<std::size_t>> sets(10);
      for (auto& s : sets) {
        for (std::size_t x = 0; x < u; ++x) {
          if (coin(rng)) s.push_back(x);
        }
      }
      const auto inst = manual(u, sets);
      const auto a = greedy_set_cover(inst);
      const auto b = reference::greedy_set_cover(inst);
      CHECK(a.chosen_indices == b.chosen_indices);
      const std::size_t opt = exhaustive_cover(inst);
      CHECK(a.covered_all == (opt <= sets.size()));
      if (a.covered_all) {
        CHECK(static_cast<double>(a.chosen.size()) <=
              (std::log(static_cast<double>(u)) + 1.0) * static_cast<double>(opt) + 1e-9);
      }
    }
  }
}

TEST_CASE("instance construction") {
  SUBCASE("everything is covered above the current dilation") {
    const MetricGraph g = testing::random_instance(3, 8, 0.3);
    const auto inst = build_instance(g, dilation(g).dilation);
    CHECK(inst.baseline.all());
    for (const auto& s : inst.sets) CHECK(s.all());
  }
  SUBCASE("two points, no edge") {
    const MetricGraph g(line_metric({0, 1}), {});
    const auto inst = build_instance(g, 1.0);
    REQUIRE(inst.sets.size() == 1);
    CHECK(inst.sets[0].all());
  }
  SUBCASE("membership rechecks against explicit distances") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      const MetricGraph g = testing::random_instance(seed, 7, 0.3, seed % 3 != 0);
      for (double t : {1.0, 1.5, 3.0}) {
        const auto inst = build_instance(g, t);
        const auto ref = reference::build_instance(g, t);
        REQUIRE(inst.sets.size() == ref.sets.size());
        CHECK(inst.candidates == ref.candidates);
        for (std::size_t i = 0; i < inst.sets.size(); ++i) CHECK(inst.sets[i] == ref.sets[i]);
        CHECK(inst.baseline == ref.baseline);
        for (const Bitset& set : inst.sets) {
          Bitset with_baseline = set;
          with_baseline |= inst.baseline;
          CHECK(with_baseline == set);
        }
      }
    }
  }
  SUBCASE("gadget set edges cover their elements' pairs") {
    const auto sc = gen_setcover_gadget(3, {{0}, {1, 2}}, 2);
    const double t = sc.yes_bound();
    const auto inst = build_instance(sc.graph, t);
    for (std::size_t l = 1; l <= sc.set_count(); ++l) {
      const Edge e = Edge::make(sc.v(l), sc.v_prime(l));
      const auto pos = std::find(inst.candidates.begin(), inst.candidates.end(), e);
      REQUIRE(pos != inst.candidates.end());
      const Bitset& s = inst.sets[static_cast<std::size_t>(pos - inst.candidates.begin())];
      for (std::size_t i : sc.sets[l - 1]) {
        for (std::size_t j = 1; j <= sc.k + 1; ++j) {
          CHECK(s.test(pair_index(sc.graph.size(), sc.u(i + 1, j), sc.u_prime(i + 1, j))));
        }
      }
    }
  }
}

TEST_CASE("coverage certifies the dilation") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const MetricGraph g = testing::random_instance(seed, 7, 0.25);
    for (double t : {1.05, 1.4, 2.0}) {
      const auto cover = greedy_set_cover(build_instance(g, t));
      if (!cover.covered_all) continue;
      CHECK(dilation(g.with_added(cover.chosen)).dilation <= t * (1 + 1e-9));
    }
  }
}

TEST_CASE("setcover search") {
  SUBCASE("complete graph") {
    auto m = line_metric({0, 1, 3});
    const MetricGraph g(m, {{0, 1}, {0, 2}, {1, 2}});
    const auto res = setcover_search(g, 1);
    CHECK(res.added.empty());
    CHECK(res.t_level == 1.0);
  }
  SUBCASE("threshold") {
    CHECK(cover_threshold(1, 6) == doctest::Approx(2.0 * (2.0 * std::log(6.0) + 1.0)));
    CHECK(cover_threshold(3, 10) == doctest::Approx(18.0 * (2.0 * std::log(10.0) + 1.0)));
  }
  SUBCASE("random instances against the oracle") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      const std::size_t k = 1 + seed % 2;
      const MetricGraph g = testing::random_instance(seed, 6 + seed % 3, 0.2);
      const auto res = setcover_search(g, k);
      const auto opt = brute_force_optimum(g, k);
      CHECK(res.t_achieved <= 1.1 * opt.t_star + 1e-6);
      CHECK(static_cast<double>(res.added.size()) <= cover_threshold(k, g.size()));
    }
  }
  SUBCASE("gadget yes instance") {
    const auto sc = gen_setcover_gadget(3, {{0}, {1, 2}}, 2);
    const auto res = setcover_search(sc.graph, 2);
    CHECK(res.t_achieved <= 1.1 * sc.yes_bound() + 1e-9);
  }
}
