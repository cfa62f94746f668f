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

#ifndef RT_CLAIMS_HPP_
#define RT_CLAIMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rt/colored_graph.hpp"
#include "rt/matching.hpp"
#include "rt/path_profile.hpp"
#include "rt/rainbow_search.hpp"
#include "rt/rational.hpp"
#include "rt/terminals.hpp"

namespace rt {

// Identifiers of the checked statements. Each is a predicate on a concrete
// (graph, base path) pair.
namespace claims {
// Colors from an end to outside vertices never equal a color freed at the
// other end.
inline constexpr const char* kOutsideMissesFreed = "outside_misses_freed";
// l_out <= k - r_new and r_out <= k - l_new.
inline constexpr const char* kOutsideCount = "outside_count";
// l_new >= 2k/7 + 2 (resp. r_new) under the minimum-degree hypothesis.
inline constexpr const char* kFreshLeft = "fresh_left";
inline constexpr const char* kFreshRight = "fresh_right";
// l_nice + r_nice >= 4k/7 + 4 under the minimum-degree hypothesis.
inline constexpr const char* kNiceSum = "nice_sum";
// l_nice + r_nice >= d(v0) + d(vk) - 2k; the degree-free core of nice_sum.
inline constexpr const char* kNiceSumCore = "nice_sum_core";
// t >= 3k/7 + 3/2 under the minimum-degree hypothesis.
inline constexpr const char* kTerminalCount = "terminal_count";
// A fresh closing edge v0vk makes every path vertex terminal.
inline constexpr const char* kClosingJumpAll = "closing_jump_all";
// Fresh chord v0v_i puts v_{i-1} in T (and mirrored).
inline constexpr const char* kFreshChordTerminal = "fresh_chord_terminal";
// Nice chord v0v_i paired with index j puts v_{i-1} (j >= i) or v_{i+1}
// (j < i) in T; checked for i < k.
inline constexpr const char* kNiceChordTerminal = "nice_chord_terminal";
// Fresh chords at indices within [lower_pivot, upper_pivot] make both path
// neighbors terminal.
inline constexpr const char* kTwoSidedTerminal = "two_sided_terminal";
// Range counts of nice / fresh chords ignore indices 0 and 1 (and k-1, k on
// the right) when the closing edge is not fresh.
inline constexpr const char* kLowIndexNice = "low_index_nice";
inline constexpr const char* kLowIndexFresh = "low_index_fresh";
// Lower bounds on t^{0,a-1} and t^{b+1,k}.
inline constexpr const char* kOuterRange = "outer_range_terminals";
// Lower bound on t^{a,b}.
inline constexpr const char* kMiddleRange = "middle_range_terminals";
// 4t >= l_nice + r_nice + 2(l_new + r_new) - 6 when a <= b.
inline constexpr const char* kTerminalCountCore = "terminal_count_core";
// t >= l_new + r_new when a > b.
inline constexpr const char* kSplitPivots = "split_pivot_terminals";
// Aux graph minimum degree >= 2k/7 + 2 under the minimum-degree hypothesis.
inline constexpr const char* kAuxMinDegree = "aux_min_degree";
// deg_H(u) >= r_new of u's witness path, for every terminal u.
inline constexpr const char* kAuxWitnessDegree = "aux_witness_degree";
// Maximum matching has size >= min(min degree of H, floor(t/2)).
inline constexpr const char* kMatchingMinDegree = "matching_min_degree";
// m >= min(2k/7 + 2, floor(t/2)) >= 3k/14 under the minimum-degree hypothesis.
inline constexpr const char* kMatchingSize = "matching_size";
// |E(G[V(M)])| >= 2m^2 - 2m - sum n_i / 2.
inline constexpr const char* kMatchedInducedEdges = "matched_induced_edges";
// d(a_i) + d(b_i) <= 3k - n_i / 2 for every matched pair.
inline constexpr const char* kMatchedPairDegree = "matched_pair_degree";
// Edges touching V(M) number at most (3k + 2 - 2m) m.
inline constexpr const char* kMatchingIncidentEdges = "matching_incident_edges";
// Consistency of the engine itself.
inline constexpr const char* kProfileIdentities = "profile_identities";
inline constexpr const char* kRuleTerminalsSubset = "rule_terminals_subset";
inline constexpr const char* kRuleAuxSubset = "rule_aux_subset";

// Statements whose hypotheses involve only the base path being a longest
// rainbow path (or nothing at all).
const std::vector<std::string>& unconditional();
}  // namespace claims

struct ClaimRecord {
  std::string id;
  bool hypotheses_met = false;
  std::optional<bool> conclusion_holds;  // evaluated only when hypotheses_met
  std::optional<Rational> slack;         // >= 0 iff an inequality holds
  std::string detail;
};

// Facts about an instance that the claim hypotheses are phrased in.
struct InstanceFacts {
  int k = 0;
  // No rainbow path of length k + 1 (proved by exhaustive search).
  bool longest = false;
  int min_degree = 0;
  // min degree >= 9k/7 + 2, compared exactly.
  bool degree_hypothesis = false;
  bool closing_edge_fresh = false;
  bool pivots_present = false;
  bool pivots_ordered = false;  // lower_pivot <= upper_pivot
  bool oracle_available = false;
};

struct AnalysisOptions {
  SearchBudget budget{std::uint64_t{200'000'000}};
  int guard = kDefaultVertexSetGuard;
  RuleOptions rules;
};

// Everything the claim checks read, computed once for a (graph, base path).
struct InstanceAnalysis {
  RainbowPath base;
  InstanceFacts facts;
  PathProfile profile;
  TerminalAnalysis rule_terminals;
  AuxGraph rule_aux;
  std::optional<TerminalAnalysis> oracle_terminals;
  std::optional<AuxGraph> oracle_aux;
  std::optional<MatchingReport> matching;
};

// Requires a proper coloring (PreconditionError otherwise) and a rainbow
// base path with at least one edge. Rule witnesses that fail validation
// throw SoundnessError.
InstanceAnalysis analyze_instance(const ColoredGraph& g, const RainbowPath& base,
                                  const AnalysisOptions& options = {});

struct ClaimReport {
  RainbowPath base;
  InstanceFacts facts;
  std::vector<ClaimRecord> claims;

  const ClaimRecord* find(const std::string& id) const;
  // False iff some claim met its hypotheses and failed its conclusion.
  bool all_hold() const;
};

ClaimReport check_claims(const ColoredGraph& g, const InstanceAnalysis& analysis);
ClaimReport check_claims(const ColoredGraph& g, const RainbowPath& base,
                         const AnalysisOptions& options = {});

}  // namespace rt

#endif  // RT_CLAIMS_HPP_
