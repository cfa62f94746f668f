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

#ifndef RT_TERMINALS_HPP_
#define RT_TERMINALS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rt/colored_graph.hpp"
#include "rt/path_profile.hpp"
#include "rt/rainbow_search.hpp"

namespace rt {

enum class DerivationMode { kRuleDerived, kOracleExact };

const char* to_string(DerivationMode mode);

// A rainbow path spanning V(P*) that starts at the terminal vertex it
// certifies, with the id of the rule that built it.
struct TerminalWitness {
  RainbowPath path;
  std::string rule;
};

// Terminal vertices of a base path P*: vertices of P* that end some rainbow
// path with vertex set exactly V(P*).
struct TerminalAnalysis {
  DerivationMode mode = DerivationMode::kRuleDerived;
  RainbowPath base;
  // members[i] is set iff base vertex v_i is terminal.
  std::vector<std::optional<TerminalWitness>> members;

  int size() const;
  bool contains_index(int i) const;
  bool contains(Vertex v) const;
  // Terminal vertices v_i with x <= i <= y; zero when x > y.
  int count_in(int x, int y) const;
  // Ascending vertex ids.
  std::vector<Vertex> vertices() const;
};

// Test hook: the first witness produced by the named rule is corrupted
// before validation, which must surface as a SoundnessError.
struct RuleOptions {
  std::string corrupt_rule;
};

// Rule ids used by terminal_rules and the rule-mode auxiliary graph. Rules
// applied to the reversed base path carry a "/mirror" suffix.
namespace rules {
inline constexpr const char* kEndpoint = "endpoint";
inline constexpr const char* kClosingJump = "closing_jump";
inline constexpr const char* kFreshChord = "fresh_chord";
inline constexpr const char* kNiceChord = "nice_chord";
inline constexpr const char* kTwoSided = "two_sided";
inline constexpr const char* kAuxWitness = "aux_witness";
inline constexpr const char* kAuxRotation = "aux_rotation";
}  // namespace rules

// Terminal vertices reachable by the explicit rotations:
//   closing_jump  v0vk fresh: every v_i via v_i..v0 vk..v_{i+1}
//   fresh_chord   fresh v0v_i: v_{i-1} via v_{i-1}..v0 v_i..vk
//   nice_chord    nice v0v_i equal to c(v_j v_{j+1}) with fresh vk v_j:
//                 v_{i-1} if j >= i, else v_{i+1}
//   two_sided     lower_pivot <= i <= upper_pivot with fresh v0v_i: v_{i+1}
// each also applied to the reversed path. Every witness is re-validated
// before admission; a failure throws SoundnessError naming the rule.
TerminalAnalysis terminal_rules(const ColoredGraph& g, const PathProfile& profile,
                                const RuleOptions& options = {});

// Exact terminal set by exhaustive search over spanning rainbow paths.
TerminalAnalysis terminal_oracle(const ColoredGraph& g, const RainbowPath& base,
                                 int guard = kDefaultVertexSetGuard);
TerminalAnalysis terminal_oracle(const RainbowPath& base, const SpanningEndpoints& endpoints);

struct AuxEdge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  RainbowPath witness;  // runs from u to v, spans V(P*)
  std::string rule;
};

// Graph on terminal vertices; uv is an edge iff some rainbow path with vertex
// set V(P*) has endpoints u and v.
struct AuxGraph {
  DerivationMode mode = DerivationMode::kRuleDerived;
  std::vector<Vertex> vertices;  // ascending
  std::vector<AuxEdge> edges;    // ascending by (u, v)

  bool has_edge(Vertex a, Vertex b) const;
  int degree(Vertex v) const;
  int min_degree() const;
};

struct AuxOptions {
  DerivationMode mode = DerivationMode::kOracleExact;
  int guard = kDefaultVertexSetGuard;
  RuleOptions rules;
};

// Rule mode starts from terminal_rules and, for every terminal u with
// witness u0..uk, adds u u_{j+1} for each fresh chord uk u_j of that witness
// (via u0..uj uk..u_{j+1}) plus the witness's own endpoint pair. Endpoints
// discovered this way join the vertex set and are expanded in turn.
AuxGraph build_aux_graph(const ColoredGraph& g, const RainbowPath& base,
                         const AuxOptions& options = {});
AuxGraph aux_graph_from_endpoints(const SpanningEndpoints& endpoints);

}  // namespace rt

#endif  // RT_TERMINALS_HPP_
