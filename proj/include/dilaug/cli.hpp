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

#ifndef DILAUG_CLI_HPP
#define DILAUG_CLI_HPP

#include <iosfwd>

namespace dilaug::cli {

/// Exit codes: 0 success, 1 internal failure, 2 invalid input or usage,
/// 3 no feasible dilation level or instance too large for the oracle.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dilaug::cli

#endif  // DILAUG_CLI_HPP
