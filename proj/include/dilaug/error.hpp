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

#ifndef DILAUG_ERROR_HPP
#define DILAUG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dilaug {

enum class ErrorCode {
  // Malformed or out-of-contract input.
  InvalidInput,
  InvalidParam,
  ZeroDistance,
  NotMetric,
  DuplicatePoint,
  NonPositiveWeight,
  DisconnectedHost,
  DuplicateEdge,
  GirthTooSmall,
  EmptySet,
  // The instance is valid but the requested computation cannot finish.
  NoFeasibleT,
  TooLarge,
  // Internal consistency checks; these indicate a bug.
  LemmaViolation,
  VerificationFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dilaug

#endif  // DILAUG_ERROR_HPP
