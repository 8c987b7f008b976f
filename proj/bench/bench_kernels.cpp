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

// Serial reference kernels against the OpenMP ones, same inputs.

#include <benchmark/benchmark.h>

#include "dilaug/distance.hpp"
#include "dilaug/generators.hpp"
#include "dilaug/girth.hpp"
#include "dilaug/oracle.hpp"
#include "dilaug/setcover.hpp"

namespace {

using namespace dilaug;

MetricGraph make(std::size_t n, double density) {
  RandomInstanceOptions o;
  o.n = n;
  o.edge_density = density;
  o.seed = 12345;
  o.spanning_tree = true;
  return gen_random(o);
}

void BM_Apsp(benchmark::State& state) {
  const MetricGraph g = make(static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(apsp(g));
}

void BM_ApspReference(benchmark::State& state) {
  const MetricGraph g = make(static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::apsp(g));
}

void BM_RelaxEdge(benchmark::State& state) {
  const MetricGraph g = make(static_cast<std::size_t>(state.range(0)), 0.05);
  const DistanceMatrix base = apsp(g);
  const auto absent = g.absent_edges();
  const Edge e = absent[absent.size() / 2];
  for (auto _ : state) {
    DistanceMatrix d = base;
    relax_edge(d, e, g.metric()(e));
    benchmark::DoNotOptimize(d);
  }
}

void BM_RelaxEdgeReference(benchmark::State& state) {
  const MetricGraph g = make(static_cast<std::size_t>(state.range(0)), 0.05);
  const DistanceMatrix base = apsp(g);
  const auto absent = g.absent_edges();
  const Edge e = absent[absent.size() / 2];
  for (auto _ : state) {
    DistanceMatrix d = base;
    reference::relax_edge(d, e, g.metric()(e));
    benchmark::DoNotOptimize(d);
  }
}

void BM_SetCoverInstance(benchmark::State& state) {
  const MetricGraph g = make(static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(build_instance(g, 1.5));
}

void BM_SetCoverInstanceReference(benchmark::State& state) {
  const MetricGraph g = make(static_cast<std::size_t>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::build_instance(g, 1.5));
}

void BM_Girth(benchmark::State& state) {
  const auto lb = gen_girth_lowerbound(cages::tutte_coxeter(), 3);
  UnweightedGraph h{lb.graph.size(), {}};
  for (const Edge& e : lb.graph.edges()) h.edges.push_back({e.u, e.v});
  for (const Edge& e : lb.m3) h.edges.push_back({e.u, e.v});
  for (auto _ : state) benchmark::DoNotOptimize(girth(h));
}

void BM_GirthReference(benchmark::State& state) {
  const auto lb = gen_girth_lowerbound(cages::tutte_coxeter(), 3);
  UnweightedGraph h{lb.graph.size(), {}};
  for (const Edge& e : lb.graph.edges()) h.edges.push_back({e.u, e.v});
  for (const Edge& e : lb.m3) h.edges.push_back({e.u, e.v});
  for (auto _ : state) benchmark::DoNotOptimize(reference::girth(h));
}

void BM_BruteForce(benchmark::State& state) {
  const MetricGraph g = make(10, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimum(g, 3));
}

void BM_BruteForceReference(benchmark::State& state) {
  const MetricGraph g = make(10, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::brute_force_optimum(g, 3));
}

BENCHMARK(BM_Apsp)->Arg(64)->Arg(256);
BENCHMARK(BM_ApspReference)->Arg(64)->Arg(256);
BENCHMARK(BM_RelaxEdge)->Arg(256)->Arg(1024);
BENCHMARK(BM_RelaxEdgeReference)->Arg(256)->Arg(1024);
BENCHMARK(BM_SetCoverInstance)->Arg(24)->Arg(48);
BENCHMARK(BM_SetCoverInstanceReference)->Arg(24)->Arg(48);
BENCHMARK(BM_Girth);
BENCHMARK(BM_GirthReference);
BENCHMARK(BM_BruteForce);
BENCHMARK(BM_BruteForceReference);

}  // namespace

BENCHMARK_MAIN();
