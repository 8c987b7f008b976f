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

#ifndef DILAUG_EDGE_HPP
#define DILAUG_EDGE_HPP

#include <compare>
#include <cstddef>
#include <limits>
#include <utility>

namespace dilaug {

using Vertex = std::size_t;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative slack for every ratio comparison. Closure sums over rationals such
// as 1/(4rn) are inexact in binary.
inline constexpr double kRelTol = 1e-9;

/// Undirected edge, normalized so that u < v. Ordering is lexicographic on
/// (u, v), which is also the tie-break used everywhere edges of equal length
/// compete.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge make(Vertex a, Vertex b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  constexpr bool touches(Vertex x) const noexcept { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 0.0;

  friend constexpr bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// a <= b up to the shared relative tolerance.
inline bool leq_tol(double a, double b) noexcept {
  return a <= b + kRelTol * (b < 0 ? -b : b);
}

}  // namespace dilaug

#endif  // DILAUG_EDGE_HPP
