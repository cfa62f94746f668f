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

#include <random>
#include <set>

#include "rt/matching.hpp"
#include "rt/rainbow_search.hpp"
#include "rt/suite.hpp"
#include "rt/terminals.hpp"
#include "support/oracles.hpp"

namespace rt {
namespace {

TEST(MaximumMatchingTest, AgreesWithSubsetDp) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) edges.emplace_back(u, v);
      }
    }
    const auto m = maximum_matching(n, edges);
    EXPECT_EQ(static_cast<int>(m.size()), testing::dp_matching_size(n, edges));
    std::set<int> used;
    const std::set<std::pair<int, int>> edge_set(edges.begin(), edges.end());
    for (auto [a, b] : m) {
      EXPECT_TRUE(edge_set.count({std::min(a, b), std::max(a, b)}));
      EXPECT_TRUE(used.insert(a).second);
      EXPECT_TRUE(used.insert(b).second);
    }
  }
}

TEST(MaximumMatchingTest, OddCycle) {
  const std::vector<std::pair<int, int>> c5 = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  EXPECT_EQ(maximum_matching(5, c5).size(), 2u);
  EXPECT_TRUE(maximum_matching(3, {}).empty());
}

TEST(FindMatchingTest, CountsMatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto g = random_proper_instance(seed * 31337, 5 + static_cast<int>(seed % 5), 0.6, 0.4);
    const auto s = longest_rainbow_path(g);
    if (s.best.length() < 1) continue;
    const auto base = s.best.canonical();
    const auto h = build_aux_graph(g, base);
    const auto r = find_matching(g, base, h);
    EXPECT_EQ(r.m, static_cast<int>(r.pairs.size()));
    EXPECT_EQ(r.aux_vertex_count, static_cast<int>(h.vertices.size()));
    EXPECT_EQ(r.aux_min_degree, h.min_degree());
    EXPECT_TRUE(r.meets_min_degree_bound());

    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < h.vertices.size(); ++i) index[h.vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> local;
    for (const auto& e : h.edges) local.emplace_back(index[e.u], index[e.v]);
    EXPECT_EQ(r.m, testing::dp_matching_size(static_cast<int>(h.vertices.size()), local));

    const auto matched = r.matched_vertices();
    const std::set<Vertex> in_m(matched.begin(), matched.end());
    EXPECT_EQ(in_m.size(), 2 * matched.size() / 2);
    int induced = 0, incident = 0;
    for (const auto& e : g.edges()) {
      const bool a = in_m.count(e.u) > 0, b = in_m.count(e.v) > 0;
      induced += a && b;
      incident += a || b;
    }
    EXPECT_EQ(r.induced_edges, induced);
    EXPECT_EQ(r.incident_edges, incident);

    const std::set<Vertex> span(base.vertices.begin(), base.vertices.end());
    for (const auto& p : r.pairs) {
      EXPECT_TRUE(h.has_edge(p.a, p.b));
      int missing = 0;
      for (Vertex x : {p.a, p.b}) {
        for (Vertex y : span) {
          if (y != p.a && y != p.b && !g.adjacent(x, y)) ++missing;
        }
      }
      EXPECT_EQ(p.non_edges, missing);
    }
  }
}

}  // namespace
}  // namespace rt
