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

#include "rt/induction.hpp"

#include <algorithm>
#include <string>

#include "rt/errors.hpp"
#include "rt/matching.hpp"

namespace rt {

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::kLowDegree:
      return "low_degree";
    case StepKind::kMatching:
      return "matching";
    case StepKind::kRebase:
      return "rebase";
  }
  return "unknown";
}

namespace {

std::string path_text(const RainbowPath& p) {
  std::string out;
  for (Vertex v : p.vertices) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

StepResult remove_vertices(const ColoredGraph& g, InductionStep step) {
  std::vector<bool> gone(g.vertex_count(), false);
  for (Vertex v : step.removed_vertices) gone[v] = true;
  StepResult result;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) result.kept.push_back(v);
  }
  int removed = 0;
  for (const auto& e : g.edges()) removed += gone[e.u] || gone[e.v];
  step.removed_edges = removed;
  result.reduced = g.induced(result.kept);
  result.step = std::move(step);
  return result;
}

}  // namespace

StepResult induction_step(const ColoredGraph& g, int k, const InductionOptions& options) {
  if (g.vertex_count() == 0) throw PreconditionError("induction step on an empty graph");
  if (k < 0) throw PreconditionError("path-length parameter must be non-negative");
  const Rational threshold = options.threshold_override.value_or(degree_threshold(k));
  if (threshold <= 0) throw PreconditionError("degree threshold must be positive");

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (Rational(g.degree(v)) < threshold || g.edge_count() == 0) {
      InductionStep step;
      step.kind = StepKind::kLowDegree;
      step.removed_vertices = {v};
      step.bound_used = threshold;
      step.k = k;
      return remove_vertices(g, std::move(step));
    }
  }

  const SearchOutcome longest = longest_rainbow_path(g, options.budget);
  if (longest.budget_exhausted) throw GuardError("longest rainbow path search exhausted its budget");
  const RainbowPath base = longest.best.canonical();
  const int found = base.length();
  if (found > k) {
    throw PropertyViolation("rainbow path of length " + std::to_string(found) +
                            " exceeds k = " + std::to_string(k) + ": " + path_text(base));
  }
  if (found < k) {
    StepResult result;
    result.reduced = g;
    for (Vertex v = 0; v < g.vertex_count(); ++v) result.kept.push_back(v);
    result.step.kind = StepKind::kRebase;
    result.step.k = found;
    return result;
  }

  AuxOptions aux_options;
  aux_options.guard = options.guard;
  aux_options.mode = static_cast<int>(base.vertices.size()) <= options.guard
                         ? DerivationMode::kOracleExact
                         : DerivationMode::kRuleDerived;
  AuxGraph h;
  try {
    h = build_aux_graph(g, base, aux_options);
  } catch (const GuardError&) {
    aux_options.mode = DerivationMode::kRuleDerived;
    h = build_aux_graph(g, base, aux_options);
  }
  const MatchingReport matching = find_matching(g, base, h);

  InductionStep step;
  step.kind = StepKind::kMatching;
  step.removed_vertices = matching.matched_vertices();
  step.k = k;
  step.m = matching.m;
  step.bound_used = degree_threshold(k) * (2 * matching.m);
  step.matching_cap = Rational((3 * k + 2 - 2 * matching.m) * matching.m);
  step.aux_mode = h.mode;
  StepResult result = remove_vertices(g, std::move(step));
  if (Rational(result.step.removed_edges) > *result.step.matching_cap) {
    throw PropertyViolation("matching step removed " + std::to_string(result.step.removed_edges) +
                            " edges, above (3k+2-2m)m = " + to_string(*result.step.matching_cap) +
                            " for base path " + path_text(base));
  }
  return result;
}

InductionCertificate run_induction(const ColoredGraph& g, int k, const InductionOptions& options) {
  if (!validate_proper(g).is_proper) throw PreconditionError("edge coloring is not proper");
  if (k < 0) throw PreconditionError("path-length parameter must be non-negative");
  const ExistenceOutcome longer = has_rainbow_path(g, k + 1, options.budget);
  if (longer.answer == Existence::kYes) {
    throw PropertyViolation("graph contains a rainbow path of length " + std::to_string(k + 1) +
                            ": " + path_text(*longer.witness));
  }
  if (longer.answer == Existence::kUnknown) {
    throw GuardError("could not rule out a rainbow path of length " + std::to_string(k + 1) +
                     " within the search budget");
  }

  InductionCertificate cert;
  cert.n = g.vertex_count();
  cert.k = k;
  cert.bound_value = degree_threshold(k) * g.vertex_count();

  ColoredGraph current = g;
  std::vector<Vertex> labels(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels[v] = v;
  int k_now = k;
  while (current.vertex_count() > 0) {
    StepResult r = induction_step(current, k_now, options);
    for (Vertex& v : r.step.removed_vertices) v = labels[v];
    std::vector<Vertex> next(r.kept.size());
    for (std::size_t i = 0; i < r.kept.size(); ++i) next[i] = labels[r.kept[i]];
    labels = std::move(next);
    k_now = r.step.k;
    cert.total_edges += r.step.removed_edges;
    cert.steps.push_back(std::move(r.step));
    current = std::move(r.reduced);
  }

  if (cert.total_edges != g.edge_count()) {
    throw PropertyViolation("telescoped edge total " + std::to_string(cert.total_edges) +
                            " differs from the edge count " + std::to_string(g.edge_count()));
  }
  cert.vacuous = cert.n == 0;
  cert.holds = cert.vacuous || Rational(cert.total_edges) < cert.bound_value;
  return cert;
}

}  // namespace rt
