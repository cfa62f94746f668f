// Copyright 2026 The rainbow-turan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rt/brute_oracle.hpp"
#include "rt/claims.hpp"
#include "rt/constructions.hpp"
#include "rt/errors.hpp"
#include "rt/graph_io.hpp"
#include "rt/induction.hpp"
#include "rt/report_json.hpp"
#include "rt/suite.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw rt::ParseError("cannot open '" + path + "' for writing");
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rt::ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit_graph(const rt::ColoredGraph& g, const std::string& out) {
  if (out.empty()) {
    std::cout << rt::to_graph_text(g);
    return;
  }
  rt::write_graph_file(out, g);
  emit({{"written", out},
        {"n", g.vertex_count()},
        {"m", g.edge_count()},
        {"C", g.color_count()},
        {"proper", rt::validate_proper(g).is_proper}});
}

rt::SearchBudget budget_of(std::uint64_t nodes) {
  return nodes == 0 ? rt::SearchBudget{} : rt::SearchBudget{nodes};
}

// Explicit base path, or the canonical longest rainbow path.
rt::RainbowPath base_path(const rt::ColoredGraph& g, const std::vector<int>& given,
                          std::uint64_t budget) {
  if (!given.empty()) {
    rt::RainbowPath p = rt::make_path(g, given);
    if (!rt::is_rainbow(g, p)) throw rt::PathError("given path is not rainbow");
    return p;
  }
  const rt::SearchOutcome s = rt::longest_rainbow_path(g, budget_of(budget));
  if (s.budget_exhausted) throw rt::GuardError("longest rainbow path search exhausted its budget");
  if (s.best.length() < 1) throw rt::PreconditionError("graph has no edges");
  return s.best.canonical();
}

int run(int argc, char** argv) {
  CLI::App app{"Rainbow path search, constructions and proof-step checks"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  std::string file, out;
  std::uint64_t budget = 0;
  std::vector<int> path;
  int k = 0, n = 0, len = 0, kmax = 0, guard = rt::kDefaultVertexSetGuard;
  bool csv = false, oracle = false;
  std::string mode = "oracle";

  // rainbow
  auto* rainbow = app.add_subcommand("rainbow", "Exact rainbow path search");
  rainbow->require_subcommand(1);
  auto* longest = rainbow->add_subcommand("longest", "Longest rainbow path");
  longest->add_option("file", file, "Graph file")->required();
  longest->add_option("--budget", budget, "DFS node budget (0 = unlimited)");
  longest->callback([&] {
    const auto g = rt::read_graph_file(file);
    const auto s = rt::longest_rainbow_path(g, budget_of(budget));
    emit({{"path", rt::to_json(s.best.canonical())},
          {"proven_optimal", s.proven_optimal},
          {"budget_exhausted", s.budget_exhausted},
          {"nodes_expanded", s.nodes_expanded}});
    if (!s.proven_optimal) exit_code = kExitGuard;
  });
  auto* exists = rainbow->add_subcommand("exists", "Is there a rainbow path of a given length");
  exists->add_option("file", file, "Graph file")->required();
  exists->add_option("--len", len, "Path length in edges")->required();
  exists->add_option("--budget", budget, "DFS node budget (0 = unlimited)");
  exists->callback([&] {
    const auto g = rt::read_graph_file(file);
    const auto r = rt::has_rainbow_path(g, len, budget_of(budget));
    const char* answer = r.answer == rt::Existence::kYes  ? "yes"
                         : r.answer == rt::Existence::kNo ? "no"
                                                          : "unknown";
    json j = {{"length", len}, {"answer", answer}, {"nodes_expanded", r.nodes_expanded}};
    if (r.witness) j["witness"] = rt::to_json(*r.witness);
    emit(j);
    if (r.answer == rt::Existence::kUnknown) exit_code = kExitGuard;
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Extremal colorings");
  construct->require_subcommand(1);
  auto* f2k = construct->add_subcommand("f2k", "K_{2^k,2^k} colored by u - v");
  f2k->add_option("--k", k, "Dimension")->required();
  f2k->add_option("-o,--out", out, "Output graph file");
  f2k->callback([&] { emit_graph(rt::bipartite_f2k(k), out); });
  auto* mm = construct->add_subcommand("mm", "K_{2^k} colored by u + v");
  mm->add_option("--k", k, "Dimension")->required();
  mm->add_option("-o,--out", out, "Output graph file");
  mm->callback([&] { emit_graph(rt::maamoun_meyniel(k), out); });
  auto* blowup = construct->add_subcommand("blowup", "Disjoint copies of the K_{2^k,2^k} coloring");
  blowup->add_option("--k", k, "Dimension")->required();
  blowup->add_option("--n", n, "Vertex count")->required();
  blowup->add_option("-o,--out", out, "Output graph file");
  blowup->callback([&] { emit_graph(rt::blowup_f2k(k, n), out); });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Bound coefficient table");
  bounds->add_option("--kmax", kmax, "Largest k")->required();
  bounds->add_flag("--csv", csv, "CSV instead of JSON");
  bounds->callback([&] {
    const auto rows = rt::bound_table(kmax);
    if (csv) {
      std::cout << rt::bound_table_csv(rows);
      return;
    }
    json list = json::array();
    for (const auto& r : rows) {
      json row = {{"k", r.k}, {"upper_old", r.upper_old}, {"new_vs_old", r.compare_upper()}};
      rt::put_rational(row, "lower", r.lower);
      rt::put_rational(row, "upper_new", r.upper_new);
      rt::put_rational(row, "eg_baseline", r.eg_baseline);
      list.push_back(row);
    }
    emit(list);
  });

  // engine
  auto* engine = app.add_subcommand("engine", "Path profile, terminals, auxiliary graph, claims");
  engine->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "Graph file")->required();
    cmd->add_option("--path", path, "Base path vertices (default: longest rainbow path)");
    cmd->add_option("--budget", budget, "DFS node budget (0 = unlimited)");
    cmd->add_option("--guard", guard, "Vertex-set guard for exact searches");
  };
  auto* profile = engine->add_subcommand("profile", "Endpoint color sets and pivots");
  add_common(profile);
  profile->callback([&] {
    const auto g = rt::read_graph_file(file);
    emit(rt::to_json(rt::compute_profile(g, base_path(g, path, budget))));
  });
  auto* terminals = engine->add_subcommand("terminals", "Terminal vertices of the base path");
  add_common(terminals);
  terminals->add_flag("--oracle", oracle, "Exact set instead of rule-derived");
  terminals->callback([&] {
    const auto g = rt::read_graph_file(file);
    const auto base = base_path(g, path, budget);
    emit(rt::to_json(oracle ? rt::terminal_oracle(g, base, guard)
                            : rt::terminal_rules(g, rt::compute_profile(g, base))));
  });
  auto* aux = engine->add_subcommand("aux", "Auxiliary graph on terminal vertices and its matching");
  add_common(aux);
  aux->add_option("--mode", mode, "rule or oracle")->check(CLI::IsMember({"rule", "oracle"}));
  aux->callback([&] {
    const auto g = rt::read_graph_file(file);
    const auto base = base_path(g, path, budget);
    rt::AuxOptions options;
    options.mode = mode == "rule" ? rt::DerivationMode::kRuleDerived : rt::DerivationMode::kOracleExact;
    options.guard = guard;
    const auto h = rt::build_aux_graph(g, base, options);
    emit({{"aux", rt::to_json(h)}, {"matching", rt::to_json(rt::find_matching(g, base, h))}});
  });
  auto* claims = engine->add_subcommand("claims", "Evaluate every proof step on the instance");
  add_common(claims);
  claims->callback([&] {
    const auto g = rt::read_graph_file(file);
    rt::AnalysisOptions options;
    if (budget) options.budget = budget_of(budget);
    options.guard = guard;
    const auto report = rt::check_claims(g, base_path(g, path, budget), options);
    emit(rt::to_json(report));
    if (!report.all_hold()) exit_code = kExitViolation;
  });
  auto* induct = engine->add_subcommand("induct", "Deletion induction certificate");
  std::string threshold;
  induct->add_option("file", file, "Graph file")->required();
  induct->add_option("--k", k, "No rainbow path of length k + 1 is assumed")->required();
  induct->add_option("--out", out, "Write the certificate here as well");
  induct->add_option("--budget", budget, "DFS node budget (0 = unlimited)");
  induct->add_option("--guard", guard, "Vertex-set guard for exact searches");
  induct->add_option("--threshold", threshold, "Override the low-degree threshold (p/q)");
  induct->callback([&] {
    const auto g = rt::read_graph_file(file);
    rt::InductionOptions options;
    if (budget) options.budget = budget_of(budget);
    options.guard = guard;
    if (!threshold.empty()) {
      rt::Rational value;
      if (!rt::try_parse_rational(threshold, value)) throw rt::ParseError("bad threshold '" + threshold + "'");
      options.threshold_override = value;
    }
    const auto cert = rt::run_induction(g, k, options);
    const json j = rt::to_json(cert);
    if (!out.empty()) write_text(out, j.dump(2) + "\n");
    emit(j);
    if (!cert.holds) exit_code = kExitViolation;
  });

  // oracle
  auto* brute = app.add_subcommand("oracle", "Exhaustive ground truth at small sizes");
  brute->require_subcommand(1);
  auto* exstar = brute->add_subcommand("exstar", "Exact rainbow Turan number of a path");
  int exstar_guard = rt::kDefaultExStarGuard;
  exstar->add_option("--n", n, "Vertex count")->required();
  exstar->add_option("--len", len, "Forbidden path length in edges")->required();
  exstar->add_option("--guard", exstar_guard, "Largest n accepted");
  exstar->callback([&] { emit(rt::to_json(rt::exstar_small(n, len, exstar_guard))); });
  auto* colorings = brute->add_subcommand("colorings", "Every proper coloring of a graph's edges");
  int edge_guard = rt::kDefaultColoringGuard;
  colorings->add_option("file", file, "Graph file (colors are ignored)")->required();
  colorings->add_option("--len", len, "Path length in edges")->required();
  colorings->add_option("--guard", edge_guard, "Largest edge count accepted");
  colorings->callback([&] {
    emit(rt::to_json(rt::forall_proper_colorings(rt::read_graph_file(file), len, edge_guard)));
  });
  auto* eg = brute->add_subcommand("eg", "Erdos-Gallai bound and extremal graph");
  eg->add_option("--n", n, "Vertex count")->required();
  eg->add_option("--k", k, "Path length excluded is k + 1")->required();
  eg->callback([&] {
    const auto r = rt::erdos_gallai(n, k);
    json j = {{"n", n}, {"k", k}, {"clique_packing_edges", rt::clique_packing_edges(n, k)},
              {"extremal", nullptr}};
    rt::put_rational(j, "bound", r.bound);
    if (r.extremal) {
      json edges = json::array();
      for (const auto& e : r.extremal->edges) edges.push_back({e.u, e.v});
      j["extremal"] = {{"n", r.extremal->n}, {"edges", edges}};
    }
    emit(j);
  });

  // suite
  auto* suite = app.add_subcommand("suite", "Check every claim over a seeded random corpus");
  std::string config_path;
  suite->add_option("--config", config_path, "Run config JSON")->required();
  suite->add_option("--out", out, "Write the summary here as well");
  suite->callback([&] {
    const auto config = rt::RunConfig::from_json_text(read_text(config_path));
    const auto summary = rt::run_suite(config);
    const std::string text = rt::to_json_text(summary);
    if (!out.empty()) write_text(out, text + "\n");
    std::cout << text << '\n';
    for (const auto& f : summary.failures) {
      std::cerr << "FAIL " << f.id << " instance " << f.index << " seed " << f.seed << ": " << f.detail
                << '\n';
    }
    if (!summary.clean()) exit_code = kExitViolation;
  });

  // validate
  auto* validate = app.add_subcommand("validate", "Parse a graph file and check properness");
  validate->add_option("file", file, "Graph file")->required();
  validate->callback([&] {
    const auto g = rt::read_graph_file(file);
    const auto report = rt::validate_proper(g);
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"vertex", v.vertex},
                            {"color", v.color},
                            {"first", {v.first.u, v.first.v}},
                            {"second", {v.second.u, v.second.v}}});
    }
    emit({{"n", g.vertex_count()},
          {"m", g.edge_count()},
          {"C", g.color_count()},
          {"is_proper", report.is_proper},
          {"violations", violations}});
    if (!report.is_proper) exit_code = kExitViolation;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const rt::GuardError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitGuard;
  } catch (const rt::SoundnessError& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const rt::PropertyViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const rt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
