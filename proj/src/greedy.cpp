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

#include "dilaug/greedy.hpp"

#include <cmath>
#include <string>

#include "dilaug/distance.hpp"
#include "dilaug/error.hpp"

namespace dilaug {

namespace {

std::size_t cap_of(double f, std::size_t k) {
  // f * k is integral for the usual presets but rarely exact in binary.
  return static_cast<std::size_t>(std::floor(f * static_cast<double>(k) + 1e-9));
}

}  // namespace

BicriteriaParams make_params(double r, std::size_t k, double delta) {
  if (!(r >= 1.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidParam, "r must be >= 1, got " + std::to_string(r));
  }
  if (k < 1) throw Error(ErrorCode::InvalidParam, "k must be >= 1");
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidParam, "delta must be > 0");
  BicriteriaParams p;
  p.r = r;
  p.k = k;
  p.delta = delta;
  p.f = 2.0 * std::pow(2.0, 1.0 / r) * std::pow(static_cast<double>(k), 1.0 / r);
  p.g = 2.0 * r;
  p.edge_cap = cap_of(p.f, k);
  return p;
}

BicriteriaParams make_custom_params(std::size_t k, double f, double g, double delta) {
  if (k < 1) throw Error(ErrorCode::InvalidParam, "k must be >= 1");
  if (!(f > 0.0) || !(g >= 1.0)) throw Error(ErrorCode::InvalidParam, "need f > 0 and g >= 1");
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidParam, "delta must be > 0");
  BicriteriaParams p;
  p.r = g / 2.0;
  p.k = k;
  p.delta = delta;
  p.f = f;
  p.g = g;
  p.edge_cap = cap_of(f, k);
  return p;
}

double log_preset_r(std::size_t k) { return std::log2(2.0 * static_cast<double>(k)); }

std::vector<Edge> GreedyTrace::edges() const {
  std::vector<Edge> out;
  out.reserve(added.size());
  for (const auto& s : added) out.push_back(s.edge);
  return out;
}

GreedyTrace greedy_t_spanner(const MetricGraph& g, double t, std::optional<std::size_t> cap) {
  if (!(t >= 1.0)) throw Error(ErrorCode::InvalidParam, "t must be >= 1");
  GreedyTrace trace;
  DistanceMatrix d = apsp(g);
  const MetricSpace& metric = g.metric();
  const double slack = t * (1.0 + kRelTol);
  for (const Edge& e : g.absent_edges()) {
    const double len = metric(e);
    const double current = d(e);
    if (!(current > slack * len)) continue;
    trace.added.push_back({e, len, current});
    if (cap && trace.added.size() > *cap) {
      trace.halt = GreedyHalt::Capped;
      return trace;
    }
    relax_edge(d, e, len);
  }
  trace.halt = GreedyHalt::Completed;
  return trace;
}

Decision decide(const MetricGraph& g, double t, const BicriteriaParams& params) {
  const GreedyTrace trace = greedy_t_spanner(g, t, params.edge_cap);
  return trace.halt == GreedyHalt::Capped ? Decision::ExceedsCap : Decision::AtMostCap;
}

AugmentationResult search(const MetricGraph& g, const BicriteriaParams& params, double t_limit) {
  const GridBracket bracket = grid_search(
      [&](double t) {
        const GreedyTrace trace = greedy_t_spanner(g, t, params.edge_cap);
        return Probe{t, trace.added.size(), trace.halt == GreedyHalt::Completed};
      },
      params.delta, t_limit);

  AugmentationResult result;
  result.added = greedy_t_spanner(g, bracket.t_accept, params.edge_cap).edges();
  result.t_level = bracket.t_accept;
  result.t_rejected = bracket.t_reject;
  result.t_achieved = dilation(g.with_added(result.added)).dilation;
  result.probes = bracket.probes;
  result.params = params;
  return result;
}

}  // namespace dilaug
