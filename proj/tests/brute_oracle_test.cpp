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

#include <fstream>
#include <json.hpp>

#include "rt/brute_oracle.hpp"
#include "rt/errors.hpp"
#include "rt/rainbow_search.hpp"
#include "support/oracles.hpp"

namespace rt {
namespace {

ColoredGraph uncolored(const Skeleton& s) {
  std::vector<Color> colors(s.edges.size());
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<Color>(i);
  return ColoredGraph::from_skeleton(s, colors);
}

void expect_valid_witness(const ExStarResult& r) {
  EXPECT_EQ(r.witness.vertex_count(), r.n);
  EXPECT_EQ(r.witness.edge_count(), r.value);
  EXPECT_TRUE(validate_proper(r.witness).is_proper);
  EXPECT_EQ(has_rainbow_path(r.witness, r.path_length).answer, Existence::kNo);
}

TEST(ExStarTest, AgreesWithNaiveEnumeration) {
  for (int len = 2; len <= 5; ++len) {
    for (int n = 1; n <= 5; ++n) {
      const auto r = exstar_small(n, len);
      EXPECT_TRUE(r.exhaustive);
      EXPECT_EQ(r.value, testing::naive_exstar(n, len)) << "n=" << n << " len=" << len;
      expect_valid_witness(r);
    }
  }
}

TEST(ExStarTest, MatchingsForPathLengthTwo) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(exstar_small(n, 2).value, n / 2);
}

TEST(ExStarTest, GoldenValues) {
  std::ifstream in(std::string(RT_GOLDEN_DIR) + "/exstar_small.json");
  ASSERT_TRUE(in.good());
  const auto golden = nlohmann::json::parse(in);
  int checked = 0;
  for (const auto& e : golden.at("entries")) {
    const int n = e.at("n"), len = e.at("path_length");
    if (n > 7) continue;
    const auto r = exstar_small(n, len);
    EXPECT_EQ(r.value, e.at("value").get<int>()) << e.at("command");
    expect_valid_witness(r);
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(ExStarTest, SandwichedByCliquePackingAndTrivialBound) {
  for (int len = 3; len <= 5; ++len) {
    for (int n = 2; n <= 6; ++n) {
      const auto r = exstar_small(n, len);
      EXPECT_GE(r.value, clique_packing_edges(n, len - 1));
      EXPECT_LE(r.value, n * (n - 1) / 2);
    }
  }
}

TEST(ExStarTest, Guards) {
  EXPECT_THROW(exstar_small(0, 3), PreconditionError);
  EXPECT_THROW(exstar_small(4, 1), PreconditionError);
  EXPECT_THROW(exstar_small(8, 3), GuardError);
  EXPECT_THROW(exstar_small(9, 3, 9), GuardError);
}

TEST(ColoringEnumerationTest, CountsMatchBruteForce) {
  for (const auto& s : {complete_graph(4), complete_bipartite(2, 3), complete_graph(3)}) {
    const auto g = uncolored(s);
    const auto e = forall_proper_colorings(g, 3);
    EXPECT_EQ(e.count, testing::brute_canonical_coloring_count(g));
    EXPECT_EQ(e.with_rainbow_path + e.without_rainbow_path, e.count);
    EXPECT_EQ(e.verdicts.size(), e.count);
    EXPECT_EQ(e.first_counterexample.has_value(), e.without_rainbow_path > 0);
  }
}

TEST(ColoringEnumerationTest, VerdictsMatchNaiveSearch) {
  const auto g = uncolored(complete_graph(4));
  const auto e = forall_proper_colorings(g, 3);
  // K4 has one 1-factorization up to color names and it has no rainbow P3.
  EXPECT_EQ(e.without_rainbow_path, 1u);
  ASSERT_TRUE(e.first_counterexample.has_value());
  EXPECT_FALSE(testing::naive_has_rainbow(*e.first_counterexample, 3));
  EXPECT_TRUE(validate_proper(*e.first_counterexample).is_proper);
}

TEST(ColoringEnumerationTest, CompleteGraphOnFive) {
  const auto g = uncolored(complete_graph(5));
  const auto e = forall_proper_colorings(g, 4);
  EXPECT_GT(e.count, 0u);
  EXPECT_EQ(e.without_rainbow_path, 0u);
  EXPECT_FALSE(e.first_counterexample.has_value());
}

TEST(ColoringEnumerationTest, Guards) {
  EXPECT_THROW(forall_proper_colorings(uncolored(complete_bipartite(4, 4)), 4), GuardError);
  EXPECT_THROW(forall_proper_colorings(uncolored(complete_graph(3)), 0), PreconditionError);
}

TEST(ErdosGallaiTest, BoundAndExtremal) {
  const auto eg = erdos_gallai(6, 2);
  EXPECT_EQ(eg.bound, Rational(6));
  ASSERT_TRUE(eg.extremal.has_value());
  EXPECT_EQ(eg.extremal->edges.size(), 6u);
  EXPECT_FALSE(erdos_gallai(7, 2).extremal.has_value());
  EXPECT_EQ(erdos_gallai(7, 2).bound, Rational(7));
  EXPECT_THROW(erdos_gallai(0, 2), PreconditionError);
  EXPECT_EQ(clique_packing_edges(6, 2), 6);
  EXPECT_EQ(clique_packing_edges(7, 2), 6);
  EXPECT_EQ(clique_packing_edges(8, 2), 7);
  EXPECT_EQ(clique_packing_edges(3, 4), 3);
}

}  // namespace
}  // namespace rt
