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

#include <set>

#include "rt/claims.hpp"
#include "rt/constructions.hpp"
#include "rt/errors.hpp"
#include "rt/rainbow_search.hpp"
#include "rt/suite.hpp"

namespace rt {
namespace {

RainbowPath longest(const ColoredGraph& g) {
  const auto s = longest_rainbow_path(g);
  EXPECT_TRUE(s.proven_optimal);
  return s.best.canonical();
}

void expect_well_formed(const ClaimReport& report) {
  std::set<std::string> ids;
  for (const auto& c : report.claims) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    if (!c.hypotheses_met) {
      EXPECT_FALSE(c.conclusion_holds.has_value()) << c.id;
      continue;
    }
    ASSERT_TRUE(c.conclusion_holds.has_value()) << c.id;
    if (c.slack) {
      EXPECT_EQ(*c.slack >= Rational(0), *c.conclusion_holds) << c.id;
    }
  }
  for (const auto& id : claims::unconditional()) EXPECT_TRUE(ids.count(id)) << id;
}

TEST(ClaimsTest, BarePath) {
  const auto g = rainbow_path_graph(6);
  const auto report = check_claims(g, longest(g));
  expect_well_formed(report);
  EXPECT_TRUE(report.all_hold());
  EXPECT_TRUE(report.facts.longest);
  EXPECT_TRUE(report.facts.oracle_available);
  EXPECT_EQ(report.facts.k, 5);
  EXPECT_FALSE(report.facts.degree_hypothesis);
  EXPECT_TRUE(report.find(claims::kProfileIdentities)->hypotheses_met);
  EXPECT_FALSE(report.find(claims::kClosingJumpAll)->hypotheses_met);
  EXPECT_FALSE(report.find(claims::kFreshLeft)->hypotheses_met);
  EXPECT_EQ(report.find("no_such_claim"), nullptr);
}

TEST(ClaimsTest, RainbowCycleTriggersClosingJump) {
  const auto g = ColoredGraph::create(
      6, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {3, 4, 3}, {4, 5, 4}, {0, 5, 5}});
  const auto report = check_claims(g, longest(g));
  expect_well_formed(report);
  ASSERT_TRUE(report.facts.closing_edge_fresh);
  const auto* c = report.find(claims::kClosingJumpAll);
  ASSERT_TRUE(c->hypotheses_met);
  EXPECT_TRUE(*c->conclusion_holds);
  EXPECT_TRUE(report.all_hold());
}

TEST(ClaimsTest, Constructions) {
  for (const auto& g : {maamoun_meyniel(2), maamoun_meyniel(3), bipartite_f2k(2)}) {
    const auto report = check_claims(g, longest(g));
    expect_well_formed(report);
    EXPECT_TRUE(report.all_hold());
  }
}

TEST(ClaimsTest, RejectsImproperColoring) {
  const auto g = ColoredGraph::create(3, {{0, 1, 0}, {1, 2, 0}});
  const auto path = make_path(g, std::vector<Vertex>{0, 1});
  EXPECT_THROW(check_claims(g, path), PreconditionError);
}

TEST(ClaimsTest, NonMaximalBaseDisablesMaximalityClaims) {
  const auto g = rainbow_path_graph(6);
  const auto report = check_claims(g, make_path(g, std::vector<Vertex>{0, 1, 2, 3}));
  expect_well_formed(report);
  EXPECT_FALSE(report.facts.longest);
  EXPECT_FALSE(report.find(claims::kOutsideMissesFreed)->hypotheses_met);
  EXPECT_FALSE(report.find(claims::kNiceSumCore)->hypotheses_met);
  EXPECT_TRUE(report.all_hold());
}

TEST(ClaimsTest, HoldAcrossRandomCorpus) {
  int met_outer = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int n = 5 + static_cast<int>(seed % 5);
    const auto g = random_proper_instance(seed * 104729, n, 0.6, 0.5);
    if (g.edge_count() == 0) continue;
    const auto report = check_claims(g, longest(g));
    expect_well_formed(report);
    EXPECT_TRUE(report.all_hold()) << "seed " << seed;
    met_outer += report.find(claims::kOuterRange)->hypotheses_met ? 1 : 0;
  }
  EXPECT_GT(met_outer, 0);
}

TEST(ClaimsTest, AnalysisExposesOracleAndMatching) {
  const auto g = maamoun_meyniel(3);
  const auto a = analyze_instance(g, longest(g));
  ASSERT_TRUE(a.oracle_terminals.has_value());
  ASSERT_TRUE(a.oracle_aux.has_value());
  ASSERT_TRUE(a.matching.has_value());
  EXPECT_EQ(a.rule_terminals.base, a.base);
  EXPECT_GE(a.oracle_terminals->size(), a.rule_terminals.size());
}

TEST(ClaimsTest, GuardDisablesOracleClaims) {
  const auto g = rainbow_path_graph(6);
  AnalysisOptions options;
  options.guard = 3;
  const auto report = check_claims(g, longest(g), options);
  EXPECT_FALSE(report.facts.oracle_available);
  EXPECT_FALSE(report.find(claims::kRuleTerminalsSubset)->hypotheses_met);
  EXPECT_TRUE(report.find(claims::kProfileIdentities)->hypotheses_met);
}

}  // namespace
}  // namespace rt
