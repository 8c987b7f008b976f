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

#ifndef DILAUG_AUGMENTATION_HPP
#define DILAUG_AUGMENTATION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dilaug/edge.hpp"
#include "dilaug/grid_search.hpp"

namespace dilaug {

struct BicriteriaParams {
  double r = 1.0;
  std::size_t k = 1;
  double delta = 0.1;
  double f = 4.0;          // sparsity factor
  double g = 2.0;          // dilation factor; the search guarantees (1 + delta) * g
  std::size_t edge_cap = 4;  // floor(f * k)
};

/// Output of either augmentation algorithm.
struct AugmentationResult {
  std::vector<Edge> added;
  double t_level = 1.0;               // grid level whose solution is returned
  std::optional<double> t_rejected;   // adjacent grid level below it that failed
  double t_achieved = 1.0;            // dilation of G + added, recomputed from scratch
  std::vector<Probe> probes;

  std::optional<BicriteriaParams> params;  // greedy search only
  std::optional<double> cover_threshold;   // set-cover search only
};

}  // namespace dilaug

#endif  // DILAUG_AUGMENTATION_HPP
