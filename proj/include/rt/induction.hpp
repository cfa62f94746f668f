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

#ifndef RT_INDUCTION_HPP_
#define RT_INDUCTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rt/colored_graph.hpp"
#include "rt/rainbow_search.hpp"
#include "rt/rational.hpp"
#include "rt/terminals.hpp"

namespace rt {

enum class StepKind { kLowDegree, kMatching, kRebase };

const char* to_string(StepKind kind);

struct InductionStep {
  StepKind kind = StepKind::kLowDegree;
  // Ids in the graph the step was taken on (run_induction maps them back to
  // the input graph).
  std::vector<Vertex> removed_vertices;
  int removed_edges = 0;
  // kLowDegree: the degree threshold; kMatching: (9k/7 + 2) * 2m.
  Rational bound_used{0};
  int k = 0;  // path-length parameter in force after the step
  int m = 0;  // matching size, kMatching only
  // kMatching: (3k + 2 - 2m) m, the cap the removed edge count is checked against.
  std::optional<Rational> matching_cap;
  DerivationMode aux_mode = DerivationMode::kOracleExact;
};

struct InductionOptions {
  SearchBudget budget{std::uint64_t{200'000'000}};
  int guard = kDefaultVertexSetGuard;
  // Replaces 9k/7 + 2 as the low-degree deletion threshold; must be positive.
  // Lets tests force matching steps on small graphs.
  std::optional<Rational> threshold_override;
};

struct StepResult {
  ColoredGraph reduced;
  // reduced vertex i is vertex kept[i] of the input.
  std::vector<Vertex> kept;
  InductionStep step;
};

// One deletion step on a nonempty graph with no rainbow path longer than k.
// Deletes the lowest-index vertex of degree below the threshold when one
// exists. Otherwise takes a longest rainbow path; if it is shorter than k
// the step only lowers k (kRebase). If not, it deletes the vertices of a
// maximum matching of the auxiliary graph, throwing PropertyViolation if
// more than (3k + 2 - 2m) m edges touch them.
StepResult induction_step(const ColoredGraph& g, int k, const InductionOptions& options = {});

struct InductionCertificate {
  std::vector<InductionStep> steps;
  int n = 0;
  int k = 0;
  int total_edges = 0;  // sum of removed_edges over the steps
  Rational bound_value{0};  // (9k/7 + 2) n
  bool holds = false;       // total_edges < bound_value, or n == 0
  bool vacuous = false;     // n == 0
};

// Requires a proper coloring (PreconditionError) and no rainbow path of
// length k + 1: a witness raises PropertyViolation, an exhausted budget
// GuardError. Steps until the graph is empty.
InductionCertificate run_induction(const ColoredGraph& g, int k, const InductionOptions& options = {});

}  // namespace rt

#endif  // RT_INDUCTION_HPP_
