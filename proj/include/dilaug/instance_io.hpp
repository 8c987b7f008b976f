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

#ifndef DILAUG_INSTANCE_IO_HPP
#define DILAUG_INSTANCE_IO_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dilaug/generators.hpp"
#include "dilaug/metric_graph.hpp"

namespace dilaug {

using Json = nlohmann::ordered_json;

struct Instance {
  MetricGraph graph;
  std::optional<InstanceLabels> labels;
};

/// Doubles go out as numbers, +inf as the string "inf".
Json number_to_json(double x);
double number_from_json(const Json& j);

Json edges_to_json(std::span<const Edge> edges);

/// {"n", "metric": {"kind", ...}, "edges", optional "labels"}
Json instance_to_json(const MetricGraph& g, const InstanceLabels* labels = nullptr);

/// Throws Error(InvalidInput) on malformed documents and the metric/graph
/// construction errors on invalid contents.
Instance instance_from_json(const Json& doc);

Instance parse_instance(std::string_view text);
Instance read_instance(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc);

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace dilaug

#endif  // DILAUG_INSTANCE_IO_HPP
