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

#include "rt/suite.hpp"

#include <chrono>
#include <future>
#include <random>

#include <json.hpp>

#include "rt/errors.hpp"
#include "rt/rainbow_search.hpp"

namespace rt {

namespace {

using nlohmann::json;

// Portable draws; the standard distributions differ across libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

const char* family_name(Family f) { return f == Family::kBarePath ? "bare_path" : "random"; }

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  RunConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "instances") c.instances = value.get<int>();
      else if (key == "n_min") c.n_min = value.get<int>();
      else if (key == "n_max") c.n_max = value.get<int>();
      else if (key == "p_min") c.p_min = value.get<double>();
      else if (key == "p_max") c.p_max = value.get<double>();
      else if (key == "fresh_color_rate") c.fresh_color_rate = value.get<double>();
      else if (key == "budget") c.budget = value.get<std::uint64_t>();
      else if (key == "guard") c.guard = value.get<int>();
      else if (key == "corrupt_rule") c.corrupt_rule = value.get<std::string>();
      else if (key == "jobs") c.jobs = value.get<int>();
      else if (key == "family") {
        const auto name = value.get<std::string>();
        if (name == "random") c.family = Family::kRandom;
        else if (name == "bare_path") c.family = Family::kBarePath;
        else throw ParseError("config: unknown family '" + name + "'");
      } else {
        throw ParseError("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (c.instances < 0) throw ParseError("config: instances must be non-negative");
  if (c.n_min < 1 || c.n_max < c.n_min) throw ParseError("config: need 1 <= n_min <= n_max");
  if (!(0 <= c.p_min && c.p_min <= c.p_max && c.p_max <= 1)) {
    throw ParseError("config: need 0 <= p_min <= p_max <= 1");
  }
  if (!(0 <= c.fresh_color_rate && c.fresh_color_rate <= 1)) {
    throw ParseError("config: need 0 <= fresh_color_rate <= 1");
  }
  if (c.jobs < 1) throw ParseError("config: jobs must be positive");
  return c;
}

std::string RunConfig::to_json_text() const {
  json j = {{"seed", seed},   {"instances", instances}, {"n_min", n_min},
            {"n_max", n_max}, {"p_min", p_min},         {"p_max", p_max},
            {"fresh_color_rate", fresh_color_rate},     {"family", family_name(family)},            {"budget", budget},
            {"guard", guard}, {"corrupt_rule", corrupt_rule}, {"jobs", jobs}};
  return j.dump(2);
}

std::uint64_t instance_seed(std::uint64_t corpus_seed, int index) {
  // splitmix64 of the pair.
  std::uint64_t z = corpus_seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ColoredGraph random_proper_instance(std::uint64_t seed, int n, double p, double fresh_color_rate) {
  if (n < 1) throw PreconditionError("random instance needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform01(rng) < p) edges.push_back({u, v});
    }
  }
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[below(rng, i)]);

  std::vector<std::vector<bool>> used(n);
  std::vector<ColoredEdge> colored;
  int palette = 0;
  for (const Edge& e : edges) {
    Color c = fresh_color_rate > 0 && uniform01(rng) < fresh_color_rate ? palette : 0;
    while (c < palette && (used[e.u][c] || used[e.v][c])) ++c;
    if (c == palette) {
      ++palette;
      for (auto& row : used) row.push_back(false);
    }
    used[e.u][c] = used[e.v][c] = true;
    colored.push_back({e.u, e.v, c});
  }
  return ColoredGraph::create(n, std::move(colored));
}

ColoredGraph random_proper_instance(const RunConfig& config, int n) {
  return random_proper_instance(config.seed, n, config.p_max, config.fresh_color_rate);
}

namespace {

struct InstanceOutcome {
  int index = 0;
  bool skipped = false;
  bool endpoints_only = false;
  std::vector<ClaimRecord> claims;
  std::vector<SuiteFailure> failures;
};

InstanceOutcome run_instance(const RunConfig& config, int index) {
  InstanceOutcome out;
  out.index = index;
  const std::uint64_t seed = instance_seed(config.seed, index);
  std::mt19937_64 rng(seed);
  const int n = config.n_min + static_cast<int>(below(rng, config.n_max - config.n_min + 1));
  const double p = config.p_min + (config.p_max - config.p_min) * uniform01(rng);
  const ColoredGraph g = config.family == Family::kBarePath ? rainbow_path_graph(n)
                                                           : random_proper_instance(rng(), n, p, config.fresh_color_rate);
  auto failure = [&](std::string id, std::string detail) {
    out.failures.push_back({index, seed, n, p, std::move(id), std::move(detail)});
  };

  const SearchOutcome longest = longest_rainbow_path(g, SearchBudget{config.budget});
  if (!longest.proven_optimal || longest.best.length() < 1) {
    out.skipped = true;
    return out;
  }
  AnalysisOptions options;
  options.budget = SearchBudget{config.budget};
  options.guard = config.guard;
  options.rules.corrupt_rule = config.corrupt_rule;
  try {
    const InstanceAnalysis analysis = analyze_instance(g, longest.best.canonical(), options);
    out.endpoints_only = analysis.rule_terminals.size() == 2 && analysis.rule_aux.edges.size() == 1;
    ClaimReport report = check_claims(g, analysis);
    for (const auto& c : report.claims) {
      if (c.hypotheses_met && !c.conclusion_holds.value_or(true)) failure(c.id, c.detail);
    }
    out.claims = std::move(report.claims);
  } catch (const SoundnessError& e) {
    failure(e.rule_id(), e.what());
  } catch (const Error& e) {
    failure("error", e.what());
  }
  return out;
}

}  // namespace

SuiteSummary run_suite(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<InstanceOutcome> outcomes(config.instances);
  auto worker = [&](int first) {
    for (int i = first; i < config.instances; i += config.jobs) outcomes[i] = run_instance(config, i);
  };
  if (config.jobs == 1) {
    worker(0);
  } else {
    std::vector<std::future<void>> running;
    for (int w = 0; w < config.jobs; ++w) running.push_back(std::async(std::launch::async, worker, w));
    for (auto& f : running) f.get();
  }

  SuiteSummary summary;
  summary.config = config;
  summary.instances = config.instances;
  for (const auto& o : outcomes) {
    summary.skipped += o.skipped;
    summary.rule_endpoints_only += o.endpoints_only;
    for (const auto& c : o.claims) {
      ClaimAggregate& a = summary.claims[c.id];
      ++a.instances;
      if (!c.hypotheses_met) continue;
      ++a.hypotheses_met;
      a.conclusions_held += c.conclusion_holds.value_or(true);
      if (c.slack && (!a.min_slack || *c.slack < *a.min_slack)) a.min_slack = c.slack;
    }
    summary.failures.insert(summary.failures.end(), o.failures.begin(), o.failures.end());
  }
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string to_json_text(const SuiteSummary& summary) {
  json claims = json::object();
  for (const auto& [id, a] : summary.claims) {
    json entry = {{"instances", a.instances},
                  {"hypotheses_met", a.hypotheses_met},
                  {"conclusions_held", a.conclusions_held},
                  {"min_slack", nullptr},
                  {"min_slack_decimal", nullptr}};
    if (a.min_slack) {
      entry["min_slack"] = to_string(*a.min_slack);
      entry["min_slack_decimal"] = to_double(*a.min_slack);
    }
    claims[id] = entry;
  }
  json failures = json::array();
  for (const auto& f : summary.failures) {
    failures.push_back({{"index", f.index},
                        {"seed", f.seed},
                        {"n", f.n},
                        {"p", f.p},
                        {"id", f.id},
                        {"detail", f.detail}});
  }
  json j = {{"config", json::parse(summary.config.to_json_text())},
            {"instances", summary.instances},
            {"skipped", summary.skipped},
            {"rule_endpoints_only", summary.rule_endpoints_only},
            {"claims", claims},
            {"failures", failures},
            {"clean", summary.clean()},
            {"seconds", summary.seconds}};
  return j.dump(2);
}

}  // namespace rt
