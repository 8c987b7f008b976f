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

#ifndef DILAUG_GRID_SEARCH_HPP
#define DILAUG_GRID_SEARCH_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dilaug/error.hpp"

namespace dilaug {

struct Probe {
  double t = 1.0;
  std::size_t size = 0;  // edges added (capped) or cover size
  bool accepted = false;
};

struct GridBracket {
  double t_accept = 1.0;
  // Adjacent lower grid point that was rejected; absent when t = 1 is accepted.
  std::optional<double> t_reject;
  std::vector<Probe> probes;
};

inline constexpr double kDefaultTLimit = 1152921504606846976.0;  // 2^60

/// Searches the multiplicative grid t_j = (1 + delta)^j, j >= 0, for adjacent
/// points t_j (rejected) and t_{j+1} (accepted). The accepted bound is found by
/// doubling t from 1; the bracket is then narrowed by bisection on j.
///
/// Monotonicity of the predicate is not assumed: every probe is logged and
/// only the two endpoint conditions of the final bracket are guaranteed.
///
/// `probe(t)` returns a Probe with `size` and `accepted` filled in.
template <class ProbeFn>
GridBracket grid_search(ProbeFn&& probe, double delta, double t_limit = kDefaultTLimit) {
  if (!(delta > 0.0)) throw Error(ErrorCode::InvalidParam, "delta must be positive");
  const double log_step = std::log1p(delta);
  auto grid = [delta](long j) { return std::pow(1.0 + delta, static_cast<double>(j)); };

  GridBracket out;
  std::map<long, bool> seen;
  auto run = [&](long j) {
    if (auto it = seen.find(j); it != seen.end()) return it->second;
    Probe p = probe(grid(j));
    p.t = grid(j);
    out.probes.push_back(p);
    seen.emplace(j, p.accepted);
    return p.accepted;
  };

  if (run(0)) {
    out.t_accept = 1.0;
    return out;
  }

  long lo = 0;
  long hi = -1;
  for (int doubling = 1;; ++doubling) {
    long j = static_cast<long>(std::ceil(doubling * std::log(2.0) / log_step));
    if (j <= lo) j = lo + 1;
    if (grid(j) > t_limit) {
      throw Error(ErrorCode::NoFeasibleT,
                  "no accepted dilation level up to " + std::to_string(t_limit));
    }
    if (run(j)) {
      hi = j;
      break;
    }
    lo = j;
  }

  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    if (run(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.t_accept = grid(hi);
  out.t_reject = grid(lo);
  return out;
}

}  // namespace dilaug

#endif  // DILAUG_GRID_SEARCH_HPP
