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

#include "dilaug/instance_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "dilaug/error.hpp"

namespace dilaug {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where + " must be an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + " is missing \"" + key + "\"");
  return *it;
}

std::size_t to_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    bad(where + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::vector<Edge> edges_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + " must be an array of [i, j] pairs");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) bad(where + " entries must be [i, j] pairs");
    out.push_back({to_index(e[0], where), to_index(e[1], where)});
  }
  return out;
}

Json labels_to_json(const InstanceLabels& labels) {
  Json out = Json::object();
  out["vertex_names"] = labels.vertex_names;
  Json classes = Json::object();
  for (const auto& [name, edges] : labels.edge_classes) classes[name] = edges_to_json(edges);
  out["edge_classes"] = std::move(classes);
  out["reference_solution"] = edges_to_json(labels.reference_solution);
  Json params = Json::object();
  for (const auto& [name, value] : labels.params) params[name] = number_to_json(value);
  out["params"] = std::move(params);
  return out;
}

InstanceLabels labels_from_json(const Json& j) {
  if (!j.is_object()) bad("\"labels\" must be an object");
  InstanceLabels labels;
  if (auto it = j.find("vertex_names"); it != j.end()) {
    if (!it->is_array()) bad("\"labels.vertex_names\" must be an array");
    for (const auto& name : *it) {
      if (!name.is_string()) bad("\"labels.vertex_names\" entries must be strings");
      labels.vertex_names.push_back(name.get<std::string>());
    }
  }
  if (auto it = j.find("edge_classes"); it != j.end()) {
    if (!it->is_object()) bad("\"labels.edge_classes\" must be an object");
    for (const auto& [name, edges] : it->items()) {
      labels.edge_classes.emplace_back(name, edges_from_json(edges, "labels.edge_classes." + name));
    }
  }
  if (auto it = j.find("reference_solution"); it != j.end()) {
    labels.reference_solution = edges_from_json(*it, "labels.reference_solution");
  }
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) bad("\"labels.params\" must be an object");
    for (const auto& [name, value] : it->items()) {
      labels.params.emplace_back(name, number_from_json(value));
    }
  }
  return labels;
}

}  // namespace

Json number_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? Json("inf") : Json("-inf");
  return Json(x);
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  bad("expected a number, got " + j.dump());
}

Json edges_to_json(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json instance_to_json(const MetricGraph& g, const InstanceLabels* labels) {
  const MetricSpace& m = g.metric();
  const std::size_t n = m.size();
  Json metric = Json::object();
  switch (m.origin()) {
    case MetricOrigin::Matrix: {
      metric["kind"] = "matrix";
      Json rows = Json::array();
      for (Vertex i = 0; i < n; ++i) {
        Json row = Json::array();
        for (double x : m.row(i)) row.push_back(x);
        rows.push_back(std::move(row));
      }
      metric["matrix"] = std::move(rows);
      break;
    }
    case MetricOrigin::Euclidean:
      metric["kind"] = "euclidean";
      metric["points"] = m.points();
      break;
    case MetricOrigin::HostGraph: {
      metric["kind"] = "host_graph";
      Json host = Json::array();
      for (const auto& e : m.host_edges()) host.push_back({e.u, e.v, e.weight});
      metric["edges"] = std::move(host);
      break;
    }
  }
  Json out = Json::object();
  out["n"] = n;
  out["metric"] = std::move(metric);
  out["edges"] = edges_to_json(g.edges());
  if (labels != nullptr) out["labels"] = labels_to_json(*labels);
  return out;
}

Instance instance_from_json(const Json& doc) {
  const std::size_t n = to_index(field(doc, "n", "instance"), "\"n\"");
  const Json& metric = field(doc, "metric", "instance");
  const Json& kind = field(metric, "kind", "\"metric\"");
  if (!kind.is_string()) bad("\"metric.kind\" must be a string");
  const auto k = kind.get<std::string>();

  std::shared_ptr<const MetricSpace> space;
  if (k == "matrix") {
    const Json& rows = field(metric, "matrix", "\"metric\"");
    if (!rows.is_array() || rows.size() != n) bad("\"metric.matrix\" must have n rows");
    std::vector<double> dist;
    dist.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) bad("\"metric.matrix\" rows must have n entries");
      for (const auto& x : row) dist.push_back(number_from_json(x));
    }
    space = std::make_shared<const MetricSpace>(MetricSpace::from_matrix(n, std::move(dist)));
  } else if (k == "euclidean") {
    const Json& pts = field(metric, "points", "\"metric\"");
    if (!pts.is_array() || pts.size() != n) bad("\"metric.points\" must have n points");
    std::vector<std::vector<double>> points;
    for (const auto& p : pts) {
      if (!p.is_array()) bad("\"metric.points\" entries must be coordinate arrays");
      std::vector<double> coords;
      for (const auto& x : p) coords.push_back(number_from_json(x));
      points.push_back(std::move(coords));
    }
    space = std::make_shared<const MetricSpace>(MetricSpace::from_points(std::move(points)));
  } else if (k == "host_graph") {
    const Json& host = field(metric, "edges", "\"metric\"");
    if (!host.is_array()) bad("\"metric.edges\" must be an array of [i, j, w]");
    std::vector<WeightedEdge> edges;
    for (const auto& e : host) {
      if (!e.is_array() || e.size() != 3) bad("\"metric.edges\" entries must be [i, j, w]");
      edges.push_back({to_index(e[0], "\"metric.edges\""), to_index(e[1], "\"metric.edges\""),
                       number_from_json(e[2])});
    }
    space = std::make_shared<const MetricSpace>(MetricSpace::from_host_graph(n, std::move(edges)));
  } else {
    bad("unknown metric kind \"" + k + "\"");
  }

  Instance out{MetricGraph(space, edges_from_json(field(doc, "edges", "instance"), "\"edges\"")),
               std::nullopt};
  if (auto it = doc.find("labels"); it != doc.end()) out.labels = labels_from_json(*it);
  return out;
}

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(doc);
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace dilaug
