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

#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "dilaug/cli.hpp"
#include "dilaug/instance_io.hpp"

using namespace dilaug;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dilaug");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "dilaug_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("dilation of a complete graph") {
  const std::string path = scratch("complete.json");
  REQUIRE(run_cli({"--seed", "3", "generate", "random", "--n", "6", "--density", "1", "--output",
                   path})
              .code == 0);
  const auto res = run_cli({"dilation", "--input", path});
  REQUIRE(res.code == 0);
  const auto doc = Json::parse(res.out);
  CHECK(doc["dilation"] == 1.0);
  CHECK(doc["verification"]["passed"] == true);
  CHECK(doc["input_digest"].get<std::string>().size() == 16);
}

TEST_CASE("augment-greedy is self-verifying") {
  const std::string path = scratch("rand9.json");
  REQUIRE(run_cli({"--seed", "9", "generate", "random", "--n", "9", "--density", "0.3",
                   "--spanning-tree", "--output", path})
              .code == 0);
  const auto res = run_cli({"augment-greedy", "--k", "2", "--r", "1", "--delta", "0.1", "--input",
                            path});
  REQUIRE(res.code == 0);
  const auto doc = Json::parse(res.out);
  // f = 4k at r = 1, so the cap is floor(f k) = 16.
  CHECK(doc["params"]["edge_cap"] == 16);
  CHECK(doc["added"].size() <= 16);
  CHECK(doc["verification"]["passed"] == true);
  CHECK(doc["probes"].size() >= 1);

  const auto oracle = Json::parse(run_cli({"oracle", "--k", "2", "--input", path}).out);
  CHECK(doc["t_achieved"].get<double>() <= 1.1 * 2.0 * oracle["t_star"].get<double>() + 1e-6);

  const auto cover = run_cli({"augment-setcover", "--k", "2", "--input", path});
  REQUIRE(cover.code == 0);
  CHECK(Json::parse(cover.out)["verification"]["passed"] == true);
}

TEST_CASE("generate then analyze the K3,3 family") {
  const std::string path = scratch("k33.json");
  REQUIRE(run_cli({"generate", "girth-lb", "--cage", "k33", "--r", "1", "--output", path}).code ==
          0);
  const auto inst = read_instance(path);
  CHECK(inst.graph.size() == 60);
  REQUIRE(inst.labels);
  const auto res = run_cli({"analyze", "--k", "5", "--r", "1", "--input", path});
  REQUIRE(res.code == 0);
  const auto doc = Json::parse(res.out);
  CHECK(doc["lemma"]["passed"] == true);
  CHECK(doc["lemma"]["girth_graph"]["girth"] == 4);
  CHECK(doc["lemma"]["within_cycle_bound"] == true);
  CHECK(doc["oracle"]["source"] == "reference_solution");
}

TEST_CASE("generated instances re-parse identically") {
  const std::string a = scratch("gadget_a.json");
  const std::string b = scratch("gadget_b.json");
  REQUIRE(run_cli({"generate", "setcover-gadget", "--elements", "3", "--sets", "1;2,3", "--k", "1",
                   "--output", a})
              .code == 0);
  const auto first = read_instance(a);
  write_json(b, instance_to_json(first.graph, first.labels ? &*first.labels : nullptr));
  const auto second = read_instance(b);
  CHECK(second.graph == first.graph);
  CHECK(second.labels == first.labels);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  const auto missing = run_cli({"augment-greedy", "--input", scratch("rand9.json")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--k") != std::string::npos);
  CHECK(run_cli({"dilation", "--input", scratch("nope.json")}).code == 2);

  const std::string bad = scratch("bad.json");
  write_json(bad, Json::parse(R"({"n": 2, "metric": {"kind": "euclidean", "points": [[0], [0]]},
                                   "edges": []})"));
  const auto dup = run_cli({"dilation", "--input", bad});
  CHECK(dup.code == 2);
  CHECK(dup.err.find("DuplicatePoint") != std::string::npos);

  // Eight isolated points cannot be joined with a cap of four edges.
  const std::string isolated = scratch("isolated.json");
  REQUIRE(run_cli({"generate", "random", "--n", "8", "--density", "0", "--output", isolated})
              .code == 0);
  CHECK(run_cli({"augment-greedy", "--k", "1", "--r", "1", "--t-limit", "1000", "--input",
                 isolated})
            .code == 3);

  const std::string big = scratch("big.json");
  REQUIRE(run_cli({"generate", "random", "--n", "40", "--density", "0.05", "--spanning-tree",
                   "--output", big})
              .code == 0);
  CHECK(run_cli({"oracle", "--k", "5", "--input", big}).code == 3);
  CHECK(run_cli({"generate", "girth-lb", "--cage", "k33", "--r", "2"}).code == 2);
  CHECK(run_cli({"generate", "setcover-gadget", "--elements", "2", "--sets", "1;", "--k", "1"})
            .code == 2);
}

TEST_CASE("check-girth-lemma") {
  const auto res = run_cli({"--seed", "4", "check-girth-lemma", "--n", "20", "--r", "2",
                            "--trials", "50"});
  REQUIRE(res.code == 0);
  const auto doc = Json::parse(res.out);
  CHECK(doc["max_girth"].get<int>() <= 4);
  CHECK(run_cli({"check-girth-lemma", "--n", "10", "--r", "1"}).code == 2);
}
