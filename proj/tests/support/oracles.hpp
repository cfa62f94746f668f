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

#ifndef RT_TESTS_SUPPORT_ORACLES_HPP_
#define RT_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "rt/colored_graph.hpp"

// Deliberately naive reference implementations. They share no code with
// the library beyond the graph container.
namespace rt::testing {

// Longest rainbow path length by plain recursion over all simple paths.
int naive_longest_rainbow(const ColoredGraph& g);

// Whether some simple path with exactly `length` edges is rainbow.
bool naive_has_rainbow(const ColoredGraph& g, int length);

// Unordered endpoint pairs {a, b} (a <= b) of rainbow paths visiting every
// vertex of `vs` exactly once, by trying all orderings.
std::set<std::pair<Vertex, Vertex>> naive_spanning_pairs(const ColoredGraph& g,
                                                         std::vector<Vertex> vs);

// Maximum matching size by exhaustive subset DP (n <= 20).
int dp_matching_size(int n, const std::vector<std::pair<int, int>>& edges);

// Number of proper colorings of g's edge set up to renaming colors, by
// counting colorings with colors drawn from 0..m-1 whose colors first
// appear in increasing order.
std::uint64_t brute_canonical_coloring_count(const ColoredGraph& g);

// Max edge count over every graph on n vertices with some proper coloring
// avoiding rainbow paths with `length` edges; no symmetry reduction.
int naive_exstar(int n, int length);

}  // namespace rt::testing

#endif  // RT_TESTS_SUPPORT_ORACLES_HPP_
