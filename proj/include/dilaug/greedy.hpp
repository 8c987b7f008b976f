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

#ifndef DILAUG_GREEDY_HPP
#define DILAUG_GREEDY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dilaug/augmentation.hpp"
#include "dilaug/metric_graph.hpp"

namespace dilaug {

/// f = 2 * 2^(1/r) * k^(1/r), g = 2r, edge_cap = floor(f * k).
/// Throws InvalidParam unless r >= 1, k >= 1 and delta > 0.
BicriteriaParams make_params(double r, std::size_t k, double delta = 0.1);

/// Explicit sparsity/dilation factors, for instances that come with their own
/// budget (the girth lower-bound family uses f = (m - 1) / (n - 1)).
BicriteriaParams make_custom_params(std::size_t k, double f, double g, double delta = 0.1);

/// r = log2(2k), which makes f = 4.
double log_preset_r(std::size_t k);

struct GreedyStep {
  Edge edge;
  double length = 0.0;          // d_M(a_i)
  double graph_distance = 0.0;  // d_{G_{i-1}}(a_i), may be +inf
};

enum class GreedyHalt { Completed, Capped };

struct GreedyTrace {
  std::vector<GreedyStep> added;
  GreedyHalt halt = GreedyHalt::Completed;

  std::vector<Edge> edges() const;
};

/// Greedy t-spanner started from G: scan absent edges shortest first (ties
/// broken lexicographically) and add every edge whose current graph distance
/// exceeds t times its length. With a cap, stops as soon as cap + 1 edges have
/// been added.
///
/// A single pass is enough: distances only shrink, so a rejected edge stays
/// rejected.
GreedyTrace greedy_t_spanner(const MetricGraph& g, double t,
                             std::optional<std::size_t> cap = std::nullopt);

enum class Decision { AtMostCap, ExceedsCap };

Decision decide(const MetricGraph& g, double t, const BicriteriaParams& params);

/// Bicriteria search: brackets t with decide(t) = ExceedsCap and
/// decide((1 + delta) t) = AtMostCap, then returns the greedy edges at the
/// upper level. Throws NoFeasibleT when no level up to t_limit is accepted.
AugmentationResult search(const MetricGraph& g, const BicriteriaParams& params,
                          double t_limit = kDefaultTLimit);

}  // namespace dilaug

#endif  // DILAUG_GREEDY_HPP
