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

#ifndef DILAUG_PARALLEL_HPP
#define DILAUG_PARALLEL_HPP

#include <cstddef>

namespace dilaug {

// Below this many rows the OpenMP kernels run on the calling thread; the
// fork/join cost dominates at desk-scale sizes.
inline constexpr std::size_t kParallelMinRows = 48;

/// Number of OpenMP threads parallel regions will use; 1 without OpenMP.
int max_threads() noexcept;

/// Forwards to omp_set_num_threads; ignored when n <= 0.
void set_threads(int n) noexcept;

}  // namespace dilaug

#endif  // DILAUG_PARALLEL_HPP
