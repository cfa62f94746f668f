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

#ifndef RT_SUITE_HPP_
#define RT_SUITE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rt/claims.hpp"
#include "rt/colored_graph.hpp"
#include "rt/rational.hpp"

namespace rt {

enum class Family { kRandom, kBarePath };

// Fully determines a corpus. JSON keys match the field names.
struct RunConfig {
  std::uint64_t seed = 1;
  int instances = 1000;
  int n_min = 4;
  int n_max = 12;
  // Edge probability drawn uniformly from [p_min, p_max] per instance.
  double p_min = 0.5;
  double p_max = 0.95;
  // Chance that an edge opens a new color although an old one is free.
  double fresh_color_rate = 0;
  Family family = Family::kRandom;
  std::uint64_t budget = 200'000'000;  // DFS nodes per search
  int guard = kDefaultVertexSetGuard;
  std::string corrupt_rule;  // test hook, see RuleOptions
  int jobs = 1;

  static RunConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

// Seed of instance `index` derived from the corpus seed.
std::uint64_t instance_seed(std::uint64_t corpus_seed, int index);

// G(n, p) with edges colored greedily in a random order: each edge takes
// the smallest color free at both ends, a new color when none is. With
// probability fresh_color_rate an edge takes a new color regardless.
ColoredGraph random_proper_instance(std::uint64_t seed, int n, double p, double fresh_color_rate = 0);
ColoredGraph random_proper_instance(const RunConfig& config, int n);

struct ClaimAggregate {
  int instances = 0;
  int hypotheses_met = 0;
  int conclusions_held = 0;
  std::optional<Rational> min_slack;
};

struct SuiteFailure {
  int index = 0;
  std::uint64_t seed = 0;
  int n = 0;
  double p = 0;
  std::string id;  // claim id, or rule id for a witness that failed validation
  std::string detail;
};

struct SuiteSummary {
  RunConfig config;
  int instances = 0;
  int skipped = 0;  // instances whose longest path could not be proven within budget
  // Instances where the rule engine found T = {v0, vk} and no rotations.
  int rule_endpoints_only = 0;
  std::map<std::string, ClaimAggregate> claims;
  std::vector<SuiteFailure> failures;
  double seconds = 0;

  bool clean() const { return failures.empty(); }
};

SuiteSummary run_suite(const RunConfig& config);

std::string to_json_text(const SuiteSummary& summary);

}  // namespace rt

#endif  // RT_SUITE_HPP_
