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

#include "dilaug/error.hpp"

namespace dilaug {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::ZeroDistance: return "ZeroDistance";
    case ErrorCode::NotMetric: return "NotMetric";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::DisconnectedHost: return "DisconnectedHost";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::GirthTooSmall: return "GirthTooSmall";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NoFeasibleT: return "NoFeasibleT";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LemmaViolation: return "LemmaViolation";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
  }
  return "Unknown";
}

}  // namespace dilaug
