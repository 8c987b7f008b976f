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

#include "dilaug/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "dilaug/distance.hpp"
#include "dilaug/error.hpp"
#include "dilaug/generators.hpp"
#include "dilaug/girth.hpp"
#include "dilaug/greedy.hpp"
#include "dilaug/instance_io.hpp"
#include "dilaug/oracle.hpp"
#include "dilaug/parallel.hpp"
#include "dilaug/setcover.hpp"

namespace dilaug::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::size_t k = 1;
  std::optional<double> r;
  double delta = 0.1;
  std::optional<double> f;
  std::optional<double> t;
  double t_limit = kDefaultTLimit;
  double max_subsets = kBruteForceGuard;

  // generate
  std::string cage = "k33";
  std::string h_file;
  std::size_t r_int = 1;
  std::size_t elements = 0;
  std::string sets;
  double epsilon = 0.25;
  std::size_t n = 10;
  double density = 0.3;
  std::string metric = "euclidean";
  bool spanning_tree = false;

  // check-girth-lemma
  std::size_t trials = 100;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("dilaug", sink);
  logger->set_pattern("[%l] %v");
  auto level = spdlog::level::warn;
  if (const char* env = std::getenv("DILATION_LOG"); env != nullptr && *env != '\0') {
    level = spdlog::level::from_str(env);
  }
  logger->set_level(level);
  return logger;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open --input " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BicriteriaParams params_from(const Options& o) {
  const double r = o.r.value_or(log_preset_r(o.k));
  if (o.f) return make_custom_params(o.k, *o.f, 2.0 * r, o.delta);
  return make_params(r, o.k, o.delta);
}

Json params_json(const BicriteriaParams& p) {
  Json j = Json::object();
  j["r"] = p.r;
  j["k"] = p.k;
  j["delta"] = p.delta;
  j["f"] = p.f;
  j["g"] = p.g;
  j["edge_cap"] = p.edge_cap;
  return j;
}

Json probes_json(const std::vector<Probe>& probes) {
  Json out = Json::array();
  for (const auto& p : probes) {
    out.push_back({{"t", p.t}, {"size", p.size}, {"accepted", p.accepted}});
  }
  return out;
}

Json optional_number(const std::optional<double>& x) {
  return x ? number_to_json(*x) : Json(nullptr);
}

// Recomputes dilation(G + S) with the serial reference kernels.
Json verification(const MetricGraph& g, const std::vector<Edge>& added, double t_achieved) {
  const MetricGraph aug = g.with_added(added);
  const double recomputed = reference::dilation(aug.metric(), reference::apsp(aug)).dilation;
  const bool both_inf = std::isinf(recomputed) && std::isinf(t_achieved);
  const double rel = both_inf ? 0.0
                              : std::abs(recomputed - t_achieved) /
                                    std::max(1.0, std::abs(recomputed));
  const bool ok = both_inf || rel <= 1e-9;
  if (!ok) {
    throw Error(ErrorCode::VerificationFailure,
                "recomputed dilation " + std::to_string(recomputed) +
                    " disagrees with reported " + std::to_string(t_achieved));
  }
  Json j = Json::object();
  j["recomputed_dilation"] = number_to_json(recomputed);
  j["relative_error"] = rel;
  j["passed"] = ok;
  return j;
}

Json cycle_json(const GirthGraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges) edges.push_back({e.a, e.b, e.greedy_index});
  Json j = Json::object();
  j["vertex_count"] = h.vertex_count;
  j["edges"] = std::move(edges);
  j["girth"] = h.girth ? Json(*h.girth) : Json(nullptr);
  j["cycle"] = h.cycle;
  return j;
}

std::vector<std::vector<std::size_t>> parse_sets(const std::string& spec, std::size_t elements) {
  // "1;2,3" -> {{0}, {1, 2}}, elements are 1-based on the command line.
  std::vector<std::vector<std::size_t>> sets;
  std::stringstream all(spec);
  std::string group;
  while (std::getline(all, group, ';')) {
    std::vector<std::size_t> set;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.find_first_not_of(" \t") == std::string::npos) continue;
      std::size_t pos = 0;
      unsigned long long id = 0;
      try {
        id = std::stoull(item, &pos);
      } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "--sets: cannot parse element \"" + item + "\"");
      }
      if (id < 1 || id > elements) {
        throw Error(ErrorCode::InvalidInput,
                    "--sets: element " + item + " outside 1.." + std::to_string(elements));
      }
      set.push_back(static_cast<std::size_t>(id - 1));
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

UnweightedGraph read_h(const std::string& path) {
  const Json doc = Json::parse(read_file(path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw Error(ErrorCode::InvalidInput, "--h-graph must name a JSON file {\"n\", \"edges\"}");
  }
  UnweightedGraph h{doc["n"].get<std::size_t>(), {}};
  for (const auto& e : doc["edges"]) h.edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
  return h;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoFeasibleT:
    case ErrorCode::TooLarge:
      return 3;
    case ErrorCode::LemmaViolation:
    case ErrorCode::VerificationFailure:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);
  Options o;
  int threads = 0;
  std::uint64_t seed = 1;

  CLI::App app{"Dilation-minimizing edge augmentation for metric graphs", "dilaug"};
  app.require_subcommand(1);
  app.add_option("--threads", threads, "OpenMP threads (0 keeps the runtime default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed for every random choice")->capture_default_str();

  auto add_input = [&o](CLI::App* sub) {
    sub->add_option("--input", o.input, "Instance JSON")->required()->check(CLI::ExistingFile);
    sub->add_option("--output", o.output, "Write the report here instead of stdout");
  };
  auto add_k = [&o](CLI::App* sub) {
    sub->add_option("--k", o.k, "Edge budget")->required()->check(CLI::PositiveNumber);
  };

  auto* greedy = app.add_subcommand("augment-greedy", "Greedy bicriteria augmentation");
  add_input(greedy);
  add_k(greedy);
  greedy->add_option("--r", o.r, "Trade-off parameter r >= 1 (default log2(2k))");
  greedy->add_option("--delta", o.delta, "Grid step")->capture_default_str();
  greedy->add_option("--f", o.f, "Override the sparsity factor f (edge cap floor(f k))");
  greedy->add_option("--t-limit", o.t_limit, "Largest dilation level tried");

  auto* cover = app.add_subcommand("augment-setcover", "Set-cover augmentation");
  add_input(cover);
  add_k(cover);
  cover->add_option("--delta", o.delta, "Grid step")->capture_default_str();
  cover->add_option("--t-limit", o.t_limit, "Largest dilation level tried");

  auto* dil = app.add_subcommand("dilation", "Dilation of the input graph");
  add_input(dil);

  auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration");
  add_input(oracle);
  add_k(oracle);
  oracle->add_option("--max-subsets", o.max_subsets, "Refuse larger enumerations")
      ->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Girth-graph analysis of the greedy search");
  add_input(analyze);
  add_k(analyze);
  analyze->add_option("--r", o.r, "Trade-off parameter r >= 1 (default log2(2k))");
  analyze->add_option("--delta", o.delta, "Grid step")->capture_default_str();
  analyze->add_option("--f", o.f,
                      "Sparsity factor; defaults to the instance's \"f\" label, then the "
                      "bicriteria value");
  analyze->add_option("--t", o.t, "Analyze this level instead of the search's rejected level");
  analyze->add_option("--max-subsets", o.max_subsets, "Oracle enumeration guard");

  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  gen->require_subcommand(1);
  auto* gen_lb = gen->add_subcommand("girth-lb", "Greedy lower-bound family from a girth graph");
  gen_lb->add_option("--cage", o.cage, "k33, heawood or tutte-coxeter")
      ->check(CLI::IsMember({"k33", "heawood", "tutte-coxeter"}))
      ->capture_default_str();
  gen_lb->add_option("--h-graph", o.h_file, "JSON {\"n\", \"edges\"} to use instead of a cage")
      ->check(CLI::ExistingFile);
  gen_lb->add_option("--r", o.r_int, "r >= 1")->required()->check(CLI::PositiveNumber);
  gen_lb->add_option("--output", o.output, "Instance path (default stdout)");

  auto* gen_sc = gen->add_subcommand("setcover-gadget", "Set-cover gadget");
  gen_sc->add_option("--elements", o.elements, "Number of elements")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_sc->add_option("--sets", o.sets, "1-based element lists, e.g. \"1;2,3\"")->required();
  gen_sc->add_option("--k", o.k, "Budget")->required()->check(CLI::PositiveNumber);
  gen_sc->add_option("--epsilon", o.epsilon, "Long-edge parameter in (0, 1)")
      ->capture_default_str();
  gen_sc->add_option("--output", o.output, "Instance path (default stdout)");

  auto* gen_rand = gen->add_subcommand("random", "Random instance");
  gen_rand->add_option("--n", o.n, "Vertex count")->check(CLI::Range(2, 1 << 20));
  gen_rand->add_option("--density", o.density, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen_rand->add_option("--metric", o.metric, "euclidean or host")
      ->check(CLI::IsMember({"euclidean", "host"}))
      ->capture_default_str();
  gen_rand->add_flag("--spanning-tree", o.spanning_tree, "Also add a random spanning tree");
  gen_rand->add_option("--output", o.output, "Instance path (default stdout)");

  auto* girth_cmd = app.add_subcommand("check-girth-lemma",
                                       "Sample graphs with ceil(n^(1+1/r))+1 edges and check "
                                       "their girth is at most 2r");
  girth_cmd->add_option("--n", o.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  girth_cmd->add_option("--r", o.r_int, "r >= 1")->required()->check(CLI::PositiveNumber);
  girth_cmd->add_option("--trials", o.trials, "Samples")->capture_default_str();
  girth_cmd->add_option("--output", o.output, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0) set_threads(threads);

  std::string command;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) command += ' ';
    command += argv[i];
  }

  const auto started = std::chrono::steady_clock::now();
  auto emit = [&](Json doc, bool with_timing) {
    if (with_timing) {
      doc["wall_time_s"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    }
    if (o.output.empty()) {
      out << doc.dump(2) << '\n';
    } else {
      write_json(o.output, doc);
      log->info("wrote {}", o.output);
    }
  };

  try {
    Json report = Json::object();
    report["command"] = command;
    std::optional<Instance> inst;
    if (!o.input.empty()) {
      const std::string text = read_file(o.input);
      report["input_digest"] = fnv1a_hex(text);
      inst.emplace(parse_instance(text));
      log->info("loaded {} points, {} edges", inst->graph.size(), inst->graph.edges().size());
    }

    if (greedy->parsed()) {
      const BicriteriaParams params = params_from(o);
      const MetricGraph& g = inst->graph;
      const AugmentationResult res = search(g, params, o.t_limit);
      for (const auto& p : res.probes) {
        log->debug("probe t={} size={} accepted={}", p.t, p.size, p.accepted);
      }
      report["params"] = params_json(params);
      report["added"] = edges_to_json(res.added);
      report["added_count"] = res.added.size();
      report["t_level"] = res.t_level;
      report["t_rejected"] = optional_number(res.t_rejected);
      report["t_achieved"] = number_to_json(res.t_achieved);
      report["probes"] = probes_json(res.probes);
      report["verification"] = verification(g, res.added, res.t_achieved);
      report["verification"]["within_edge_cap"] = res.added.size() <= params.edge_cap;
      emit(std::move(report), true);
    } else if (cover->parsed()) {
      const MetricGraph& g = inst->graph;
      const AugmentationResult res = setcover_search(g, o.k, o.delta, o.t_limit);
      report["k"] = o.k;
      report["delta"] = o.delta;
      report["threshold"] = number_to_json(res.cover_threshold.value_or(kInf));
      report["added"] = edges_to_json(res.added);
      report["cover_size"] = res.added.size();
      report["t_level"] = res.t_level;
      report["t_rejected"] = optional_number(res.t_rejected);
      report["t_achieved"] = number_to_json(res.t_achieved);
      report["probes"] = probes_json(res.probes);
      report["verification"] = verification(g, res.added, res.t_achieved);
      emit(std::move(report), true);
    } else if (dil->parsed()) {
      const MetricGraph& g = inst->graph;
      const DilationReport d = dilation(g);
      report["n"] = g.size();
      report["edge_count"] = g.edges().size();
      report["components"] = g.component_count();
      report["dilation"] = number_to_json(d.dilation);
      report["witness"] = d.witness ? Json::array({d.witness->u, d.witness->v}) : Json(nullptr);
      report["verification"] = verification(g, {}, d.dilation);
      emit(std::move(report), true);
    } else if (oracle->parsed()) {
      const MetricGraph& g = inst->graph;
      const OptimalSolution opt = brute_force_optimum(g, o.k, o.max_subsets);
      report["k"] = o.k;
      report["t_star"] = number_to_json(opt.t_star);
      report["s_star"] = edges_to_json(opt.s_star);
      report["proven_optimal"] = opt.proven_optimal;
      report["verification"] = verification(g, opt.s_star, opt.t_star);
      emit(std::move(report), true);
    } else if (analyze->parsed()) {
      const MetricGraph& g = inst->graph;
      if (!o.f && inst->labels) {
        if (auto f = inst->labels->param("f")) {
          o.f = *f;
          log->info("using the instance's f = {}", *f);
        }
      }
      const BicriteriaParams params = params_from(o);
      const AugmentationResult res = search(g, params);
      report["params"] = params_json(params);
      report["search"] = {{"t_level", res.t_level},
                          {"t_rejected", optional_number(res.t_rejected)},
                          {"t_achieved", number_to_json(res.t_achieved)},
                          {"added", edges_to_json(res.added)},
                          {"probes", probes_json(res.probes)}};

      std::optional<OptimalSolution> opt;
      std::string source = "brute_force";
      try {
        opt = brute_force_optimum(g, o.k, o.max_subsets);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge || !inst->labels ||
            inst->labels->reference_solution.empty() ||
            inst->labels->reference_solution.size() > o.k) {
          throw;
        }
        log->info("{}; using the instance's reference solution", e.what());
        opt = solution_from_edges(g, inst->labels->reference_solution);
        source = "reference_solution";
      }
      report["oracle"] = {{"source", source},
                          {"t_star", number_to_json(opt->t_star)},
                          {"s_star", edges_to_json(opt->s_star)},
                          {"proven_optimal", opt->proven_optimal}};

      const std::optional<double> level = o.t ? o.t : res.t_rejected;
      Json lemma = Json::object();
      if (!level) {
        lemma["branch"] = std::string(to_string(LemmaBranch::NotApplicable));
        lemma["note"] = "greedy met the cap at t = 1; no rejected level to analyze";
      } else {
        const GreedyTrace trace = greedy_t_spanner(g, *level, params.edge_cap);
        const MainLemmaReport m = verify_main_lemma(g, *opt, *level, trace, params);
        lemma["branch"] = std::string(to_string(m.branch));
        lemma["t"] = m.t;
        lemma["t_star"] = number_to_json(m.t_star);
        lemma["greedy_edges"] = edges_to_json(trace.edges());
        lemma["greedy_edges_used"] = m.greedy_edges_used;
        lemma["cycle_length"] = m.cycle_length ? Json(*m.cycle_length) : Json(nullptr);
        lemma["cycle"] = m.cycle;
        lemma["closing_index"] = m.closing_index ? Json(*m.closing_index) : Json(nullptr);
        lemma["case1_index"] = m.case1_index ? Json(*m.case1_index) : Json(nullptr);
        lemma["path_length"] = number_to_json(m.path_length);
        lemma["path_lower_bound"] = m.path_lower_bound;
        lemma["path_upper_bound"] = m.path_upper_bound;
        lemma["within_cycle_bound"] = m.within_cycle_bound;
        lemma["within_g_bound"] = m.within_g_bound;
        lemma["checks"] = m.checks;
        lemma["girth_graph"] = cycle_json(m.girth_graph);
      }
      lemma["passed"] = true;
      report["lemma"] = std::move(lemma);
      emit(std::move(report), true);
    } else if (gen_lb->parsed()) {
      UnweightedGraph h;
      if (!o.h_file.empty()) {
        h = read_h(o.h_file);
      } else if (o.cage == "k33") {
        h = cages::k33();
      } else if (o.cage == "heawood") {
        h = cages::heawood();
      } else {
        h = cages::tutte_coxeter();
      }
      const GirthLowerBoundInstance lb = gen_girth_lowerbound(h, o.r_int);
      const InstanceLabels labels = lb.labels();
      emit(instance_to_json(lb.graph, &labels), false);
    } else if (gen_sc->parsed()) {
      const auto sets = parse_sets(o.sets, o.elements);
      const SetCoverGadgetInstance sc = gen_setcover_gadget(o.elements, sets, o.k, o.epsilon);
      const InstanceLabels labels = sc.labels();
      emit(instance_to_json(sc.graph, &labels), false);
    } else if (gen_rand->parsed()) {
      RandomInstanceOptions ro;
      ro.n = o.n;
      ro.edge_density = o.density;
      ro.kind = o.metric == "host" ? RandomMetricKind::HostGraph : RandomMetricKind::Euclidean;
      ro.seed = seed;
      ro.spanning_tree = o.spanning_tree;
      emit(instance_to_json(gen_random(ro)), false);
    } else if (girth_cmd->parsed()) {
      const GirthLemmaReport rep = check_girth_lemma(o.n, o.r_int, o.trials, seed);
      report["n"] = rep.n;
      report["r"] = rep.r;
      report["edges"] = rep.edges;
      report["trials"] = rep.trials;
      report["seed"] = seed;
      report["max_girth"] = rep.max_girth ? Json(*rep.max_girth) : Json(nullptr);
      report["bound"] = 2 * rep.r;
      report["passed"] = true;
      emit(std::move(report), true);
    }
    return 0;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const Json::exception& e) {
    err << "error [InvalidInput]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace dilaug::cli
