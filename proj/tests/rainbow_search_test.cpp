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

#include "rt/constructions.hpp"
#include "rt/errors.hpp"
#include "rt/rainbow_search.hpp"
#include "rt/suite.hpp"
#include "support/oracles.hpp"

namespace rt {
namespace {

TEST(IsRainbowTest, BasicCases) {
  const auto p = rainbow_path_graph(5);
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_TRUE(is_rainbow(p, all));
  const auto k4 = one_factorization(4);
  // Any two adjacent edges of a proper coloring differ.
  EXPECT_TRUE(is_rainbow(k4, std::vector<Vertex>{0, 1, 2}));
  const std::vector<Vertex> single{3};
  EXPECT_TRUE(is_rainbow(k4, single));
}

TEST(IsRainbowTest, RepeatedColorIsNotRainbow) {
  const auto g = ColoredGraph::create(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}});
  EXPECT_FALSE(is_rainbow(g, std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(IsRainbowTest, NonPathsThrow) {
  const auto g = rainbow_path_graph(4);
  EXPECT_THROW(is_rainbow(g, std::vector<Vertex>{0, 2}), PathError);
  EXPECT_THROW(is_rainbow(g, std::vector<Vertex>{0, 1, 0}), PathError);
  EXPECT_THROW(is_rainbow(g, std::vector<Vertex>{0, 9}), PathError);
  RainbowPath wrong = make_path(g, std::vector<Vertex>{0, 1, 2});
  wrong.colors[0] = 2;
  EXPECT_THROW(is_rainbow(g, wrong), PathError);
}

TEST(LongestRainbowPathTest, AgreesWithNaiveOracleOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int n = 2 + static_cast<int>(seed % 8);
    const auto g = random_proper_instance(seed, n, 0.3 + 0.05 * static_cast<double>(seed % 12),
                                          seed % 3 == 0 ? 0.4 : 0.0);
    const auto result = longest_rainbow_path(g);
    ASSERT_TRUE(result.proven_optimal);
    EXPECT_EQ(result.best.length(), testing::naive_longest_rainbow(g)) << "seed " << seed;
    if (result.best.length() > 0) {
      EXPECT_TRUE(is_rainbow(g, result.best));
    }
  }
}

TEST(LongestRainbowPathTest, ReturnsLexLeastCanonicalPath) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_proper_instance(seed, 6, 0.6);
    const auto best = longest_rainbow_path(g).best;
    const int len = best.length();
    ASSERT_GT(len, 0);
    // Every longest rainbow path is a prefix of some vertex permutation.
    std::vector<Vertex> vs(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) vs[i] = i;
    std::set<std::vector<Vertex>> candidates;
    do {
      const std::vector<Vertex> prefix(vs.begin(), vs.begin() + len + 1);
      if (prefix.front() > prefix.back()) continue;
      bool ok = true;
      std::vector<Color> colors;
      for (int i = 0; i < len && ok; ++i) {
        const auto c = g.color_of(prefix[i], prefix[i + 1]);
        if (c) colors.push_back(*c);
        else ok = false;
      }
      std::sort(colors.begin(), colors.end());
      if (ok && std::adjacent_find(colors.begin(), colors.end()) == colors.end()) candidates.insert(prefix);
    } while (std::next_permutation(vs.begin(), vs.end()));
    ASSERT_FALSE(candidates.empty());
    EXPECT_EQ(best.vertices, *candidates.begin()) << "seed " << seed;
  }
}

TEST(LongestRainbowPathTest, EmptyAndEdgelessGraphs) {
  const auto empty = ColoredGraph::create(0, {});
  EXPECT_EQ(longest_rainbow_path(empty).best.length(), 0);
  const auto isolated = ColoredGraph::create(3, {});
  const auto r = longest_rainbow_path(isolated);
  EXPECT_EQ(r.best.length(), 0);
  EXPECT_TRUE(r.proven_optimal);
}

TEST(LongestRainbowPathTest, BudgetExhaustionIsReported) {
  const auto g = one_factorization(8);
  const auto r = longest_rainbow_path(g, SearchBudget{5});
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_FALSE(r.proven_optimal);
}

TEST(HasRainbowPathTest, AgreesWithNaiveOracle) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = random_proper_instance(seed, 7, 0.5, 0.3);
    for (int len = 1; len <= 7; ++len) {
      const auto r = has_rainbow_path(g, len);
      ASSERT_NE(r.answer, Existence::kUnknown);
      EXPECT_EQ(r.answer == Existence::kYes, testing::naive_has_rainbow(g, len)) << seed << " " << len;
      if (r.witness) {
        EXPECT_EQ(r.witness->length(), len);
        EXPECT_TRUE(is_rainbow(g, *r.witness));
      }
    }
  }
}

TEST(HasRainbowPathTest, LengthBeyondCapacityIsNoWithoutSearch) {
  const auto g = bipartite_f2k(2);
  const auto r = has_rainbow_path(g, 5);  // only 4 colors
  EXPECT_EQ(r.answer, Existence::kNo);
  EXPECT_EQ(r.nodes_expanded, 0u);
  EXPECT_THROW(has_rainbow_path(g, 0), PreconditionError);
}

TEST(HasRainbowPathTest, BudgetYieldsUnknownNotNo) {
  const auto g = bipartite_f2k(3);
  const auto r = has_rainbow_path(g, 8, SearchBudget{10});
  EXPECT_EQ(r.answer, Existence::kUnknown);
}

TEST(EnumerateTest, MatchesNaiveSpanningPairs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = random_proper_instance(seed, 7, 0.7, 0.3);
    const std::vector<Vertex> vset{0, 2, 3, 5, 6};
    std::set<std::pair<Vertex, Vertex>> seen;
    int count = 0;
    enumerate_rainbow_paths_on(g, vset, [&](const RainbowPath& p) {
      EXPECT_TRUE(is_rainbow(g, p));
      EXPECT_LT(p.front(), p.back());
      std::vector<Vertex> sorted = p.vertices;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(sorted, vset);
      seen.emplace(p.front(), p.back());
      ++count;
      return true;
    });
    EXPECT_EQ(seen, testing::naive_spanning_pairs(g, vset)) << seed;
    const auto all = collect_rainbow_paths_on(g, vset);
    EXPECT_EQ(static_cast<int>(all.size()), count);
  }
}

TEST(EnumerateTest, SingleVertexAndGuard) {
  const auto g = one_factorization(5);
  const std::vector<Vertex> one{2};
  const auto paths = collect_rainbow_paths_on(g, one);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].length(), 0);
  const auto big = one_factorization(18);
  std::vector<Vertex> all(18);
  for (int i = 0; i < 18; ++i) all[i] = i;
  EXPECT_THROW(collect_rainbow_paths_on(big, all), GuardError);
}

TEST(SpanningEndpointsTest, AgreesWithNaivePairs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = random_proper_instance(seed, 8, 0.6, seed % 2 ? 0.5 : 0.0);
    std::vector<Vertex> vset{0, 1, 3, 4, 6, 7};
    const auto se = SpanningEndpoints::compute(g, vset);
    const auto pairs = testing::naive_spanning_pairs(g, vset);
    for (Vertex a : vset) {
      for (Vertex b : vset) {
        const bool expected = a != b && pairs.count({std::min(a, b), std::max(a, b)}) > 0;
        EXPECT_EQ(se.connected(a, b), expected) << seed << ": " << a << "-" << b;
        if (const RainbowPath* w = se.witness(a, b)) {
          EXPECT_EQ(w->front(), a);
          EXPECT_EQ(w->back(), b);
          EXPECT_TRUE(is_rainbow(g, *w));
        }
      }
    }
  }
}

TEST(SpanningEndpointsTest, WitnessIsLexLeast) {
  const auto g = one_factorization(6);
  const std::vector<Vertex> vset{0, 1, 2, 3, 4, 5};
  const auto se = SpanningEndpoints::compute(g, vset);
  const auto all = collect_rainbow_paths_on(g, vset);
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = 0; b < 6; ++b) {
      std::optional<std::vector<Vertex>> least;
      for (const auto& p : all) {
        for (const auto& q : {p, p.reversed()}) {
          if (q.front() == a && q.back() == b && (!least || q.vertices < *least)) least = q.vertices;
        }
      }
      const RainbowPath* w = se.witness(a, b);
      ASSERT_EQ(w != nullptr, least.has_value());
      if (w) {
        EXPECT_EQ(w->vertices, *least);
      }
    }
  }
}

}  // namespace
}  // namespace rt
