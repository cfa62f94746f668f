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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "rt/errors.hpp"
#include "rt/path_profile.hpp"
#include "rt/rainbow_search.hpp"
#include "rt/suite.hpp"
#include "rt/terminals.hpp"
#include "support/oracles.hpp"

namespace rt {
namespace {

RainbowPath straight(const ColoredGraph& g, int k) {
  std::vector<Vertex> vs(k + 1);
  for (int i = 0; i <= k; ++i) vs[i] = i;
  return make_path(g, vs);
}

// Path 0-1-2-3-4-5 with colors 0..4 plus chords 5-1 (fresh color 9) and
// 0-3 (color 1, which rotating along 5-1 frees).
ColoredGraph nice_chord_instance() {
  return ColoredGraph::create_compacted(
      6, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {3, 4, 3}, {4, 5, 4}, {1, 5, 9}, {0, 3, 1}});
}

std::set<Vertex> naive_terminals(const ColoredGraph& g, const RainbowPath& base) {
  std::set<Vertex> out;
  for (const auto& [a, b] : testing::naive_spanning_pairs(g, base.vertices)) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

struct Instance {
  ColoredGraph g;
  RainbowPath base;
  bool longest = false;
};

std::vector<Instance> corpus(int count, double fresh_rate) {
  std::vector<Instance> out;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    auto g = random_proper_instance(seed * 7919, n, 0.35 + 0.06 * static_cast<double>(seed % 10), fresh_rate);
    const auto s = longest_rainbow_path(g);
    if (s.best.length() < 1) continue;
    out.push_back({g, s.best.canonical(), s.proven_optimal});
  }
  return out;
}

TEST(PathProfileTest, BarePath) {
  const auto g = rainbow_path_graph(6);
  const auto p = compute_profile(g, straight(g, 5));
  EXPECT_EQ(p.k, 5);
  EXPECT_EQ(p.left.all, ColorList{0});
  EXPECT_EQ(p.right.all, ColorList{4});
  EXPECT_TRUE(p.left.outside.empty());
  EXPECT_TRUE(p.left.fresh.empty());
  EXPECT_TRUE(p.right.freed.empty());
  EXPECT_FALSE(p.pivots_present());
  EXPECT_FALSE(p.closing_edge_fresh());
  EXPECT_TRUE(profile_identity_failures(g, p, true).empty());
}

TEST(PathProfileTest, NiceChordInstance) {
  const auto g = nice_chord_instance();
  const auto p = compute_profile(g, straight(g, 5));
  const Color fresh = *g.color_of(1, 5);
  EXPECT_EQ(p.right.fresh, ColorList{fresh});
  EXPECT_TRUE(p.right.has_fresh_chord(1));
  EXPECT_EQ(p.right.freed, ColorList{*g.color_of(1, 2)});
  EXPECT_TRUE(p.left.has_nice_chord(3));
  EXPECT_EQ(p.left.nice, ColorList{*g.color_of(0, 3)});
  EXPECT_EQ(p.left.residual, ColorList{*g.color_of(0, 1)});
  EXPECT_EQ(p.left_nice_in(0, 5), 1);
  EXPECT_EQ(p.left_nice_in(4, 5), 0);
  EXPECT_EQ(p.right_fresh_in(0, 5), 1);
  EXPECT_TRUE(profile_identity_failures(g, p, true).empty());
}

TEST(PathProfileTest, RejectsNonRainbowAndTrivialPaths) {
  const auto g = ColoredGraph::create(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}});
  EXPECT_THROW(compute_profile(g, straight(g, 3)), PathError);
  const auto h = rainbow_path_graph(3);
  RainbowPath single;
  single.vertices = {0};
  EXPECT_THROW(compute_profile(h, single), PathError);
}

TEST(PathProfileTest, IdentitiesHoldAcrossCorpus) {
  for (const auto& inst : corpus(150, 0.4)) {
    const auto p = compute_profile(inst.g, inst.base);
    const auto failures = profile_identity_failures(inst.g, p, inst.longest);
    EXPECT_TRUE(failures.empty()) << failures.front();
    EXPECT_EQ(static_cast<int>(p.left.all.size()), inst.g.degree(inst.base.front()));
    EXPECT_EQ(static_cast<int>(p.right.all.size()), inst.g.degree(inst.base.back()));
    if (p.lower_pivot) {
      EXPECT_LT(*p.lowest, *p.lower_pivot);
    }
    if (p.upper_pivot) {
      EXPECT_LT(*p.upper_pivot, *p.highest);
    }
  }
}

TEST(TerminalRulesTest, BarePathHasOnlyEndpoints) {
  const auto g = rainbow_path_graph(7);
  const auto t = terminal_rules(g, compute_profile(g, straight(g, 6)));
  EXPECT_EQ(t.size(), 2);
  EXPECT_TRUE(t.contains_index(0));
  EXPECT_TRUE(t.contains_index(6));
  EXPECT_EQ(t.members[0]->rule, rules::kEndpoint);
  EXPECT_EQ(terminal_oracle(g, straight(g, 6)).size(), 2);
}

TEST(TerminalRulesTest, ClosingJumpMakesEveryVertexTerminal) {
  const auto g = ColoredGraph::create(
      6, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {3, 4, 3}, {4, 5, 4}, {0, 5, 5}});
  const auto p = compute_profile(g, straight(g, 5));
  ASSERT_TRUE(p.closing_edge_fresh());
  const auto t = terminal_rules(g, p);
  EXPECT_EQ(t.size(), 6);
  for (int i = 1; i < 5; ++i) {
    EXPECT_EQ(t.members[i]->rule.rfind(rules::kClosingJump, 0), 0u) << t.members[i]->rule;
  }
}

TEST(TerminalRulesTest, FreshChordRotation) {
  // Path 0..4 with colors 0..3 and fresh chord 0-3.
  const auto g = ColoredGraph::create_compacted(5, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {3, 4, 3}, {0, 3, 7}});
  const auto t = terminal_rules(g, compute_profile(g, straight(g, 4)));
  ASSERT_TRUE(t.contains_index(2));
  EXPECT_EQ(t.members[2]->rule, rules::kFreshChord);
  EXPECT_EQ(t.members[2]->path.vertices, (std::vector<Vertex>{2, 1, 0, 3, 4}));
}

TEST(TerminalRulesTest, NiceChordRotation) {
  const auto g = nice_chord_instance();
  const auto t = terminal_rules(g, compute_profile(g, straight(g, 5)));
  // Chord 0-3 is nice with partner j = 1 < 3, so v2 is reached.
  ASSERT_TRUE(t.contains_index(2));
  EXPECT_EQ(t.members[2]->rule, rules::kNiceChord);
  EXPECT_EQ(t.members[2]->path.vertices, (std::vector<Vertex>{2, 3, 0, 1, 5, 4}));
  EXPECT_EQ(t.vertices(), (std::vector<Vertex>{0, 2, 5}));
  const auto oracle = terminal_oracle(g, straight(g, 5));
  for (Vertex v : t.vertices()) EXPECT_TRUE(oracle.contains(v));
}

TEST(TerminalRulesTest, CorruptedWitnessRaisesSoundnessError) {
  const auto g = nice_chord_instance();
  const auto p = compute_profile(g, straight(g, 5));
  for (const char* rule : {rules::kEndpoint, rules::kFreshChord, rules::kNiceChord}) {
    RuleOptions options;
    options.corrupt_rule = rule;
    try {
      terminal_rules(g, p, options);
      ADD_FAILURE() << "no error for " << rule;
    } catch (const SoundnessError& e) {
      EXPECT_EQ(e.rule_id().substr(0, e.rule_id().find('/')), rule);
    }
  }
}

TEST(TerminalOracleTest, MatchesPermutationOracle) {
  for (const auto& inst : corpus(120, 0.4)) {
    const auto t = terminal_oracle(inst.g, inst.base);
    const auto vs = t.vertices();
    EXPECT_EQ(std::set<Vertex>(vs.begin(), vs.end()), naive_terminals(inst.g, inst.base));
    for (const auto& m : t.members) {
      if (!m) continue;
      EXPECT_TRUE(is_rainbow(inst.g, m->path));
      EXPECT_EQ(m->path.length(), inst.base.length());
    }
  }
}

TEST(TerminalOracleTest, RangeCounts) {
  const auto g = nice_chord_instance();
  const auto t = terminal_oracle(g, straight(g, 5));
  EXPECT_EQ(t.count_in(0, 5), t.size());
  EXPECT_EQ(t.count_in(3, 2), 0);
  EXPECT_EQ(t.count_in(0, 0), 1);
  EXPECT_EQ(t.count_in(0, 2) + t.count_in(3, 5), t.size());
}

TEST(ConservativityTest, RuleTerminalsAndEdgesAreOracleSubsets) {
  for (const auto& inst : corpus(200, 0.4)) {
    const auto profile = compute_profile(inst.g, inst.base);
    const auto rule_t = terminal_rules(inst.g, profile);
    const auto oracle_t = terminal_oracle(inst.g, inst.base);
    for (int i = 0; i <= profile.k; ++i) {
      if (rule_t.contains_index(i)) {
        EXPECT_TRUE(oracle_t.contains_index(i));
      }
    }
    AuxOptions rule_mode;
    rule_mode.mode = DerivationMode::kRuleDerived;
    const auto rule_h = build_aux_graph(inst.g, inst.base, rule_mode);
    const auto oracle_h = build_aux_graph(inst.g, inst.base);
    for (const auto& e : rule_h.edges) {
      EXPECT_TRUE(oracle_h.has_edge(e.u, e.v));
      EXPECT_TRUE(is_rainbow(inst.g, e.witness));
      EXPECT_EQ(e.witness.front(), e.u);
      EXPECT_EQ(e.witness.back(), e.v);
    }
  }
}

TEST(AuxGraphTest, OracleEdgesMatchPermutationOracle) {
  for (const auto& inst : corpus(80, 0.5)) {
    const auto h = build_aux_graph(inst.g, inst.base);
    std::set<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : h.edges) edges.emplace(e.u, e.v);
    EXPECT_EQ(edges, testing::naive_spanning_pairs(inst.g, inst.base.vertices));
    EXPECT_TRUE(h.has_edge(inst.base.back(), inst.base.front()));
  }
}

TEST(AuxGraphTest, DegreeHelpers) {
  const auto g = nice_chord_instance();
  const auto h = build_aux_graph(g, straight(g, 5));
  for (Vertex v : h.vertices) EXPECT_GE(h.degree(v), h.min_degree());
  EXPECT_EQ(h.degree(99), 0);
}

}  // namespace
}  // namespace rt
