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

#ifndef RT_BRUTE_ORACLE_HPP_
#define RT_BRUTE_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rt/colored_graph.hpp"
#include "rt/rational.hpp"

namespace rt {

struct ExStarResult {
  int n = 0;
  int path_length = 0;
  int value = 0;  // max edges of a proper coloring with no rainbow path of path_length edges
  ColoredGraph witness;
  bool exhaustive = true;
  std::uint64_t graphs_examined = 0;
  std::uint64_t coloring_nodes = 0;
};

inline constexpr int kDefaultExStarGuard = 7;

// Exact value by exhausting edge sets in descending size. Edge sets whose
// degree sequence is not non-increasing in vertex order are skipped: every
// graph has an isomorphic copy that is not. Throws GuardError when
// n > guard (guard at most 8) and PreconditionError when n < 1 or
// path_length < 2.
ExStarResult exstar_small(int n, int path_length, int guard = kDefaultExStarGuard);

struct ColoringEnumeration {
  ColoredGraph target;  // the input graph with its original coloring
  int path_length = 0;
  std::uint64_t count = 0;             // canonical proper colorings
  std::uint64_t with_rainbow_path = 0;
  std::uint64_t without_rainbow_path = 0;
  // verdicts[i]: the i-th coloring in enumeration order contains a rainbow path.
  std::vector<bool> verdicts;
  std::optional<ColoredGraph> first_counterexample;  // first coloring without one
};

inline constexpr int kDefaultColoringGuard = 15;

// Every proper coloring of g's edge set, canonicalized so that colors first
// appear in increasing order along g.edges(). Throws GuardError above
// max_edges edges or 64 vertices.
ColoringEnumeration forall_proper_colorings(const ColoredGraph& g, int path_length,
                                            int max_edges = kDefaultColoringGuard);

struct ErdosGallai {
  Rational bound{0};                 // kn / 2
  std::optional<Skeleton> extremal;  // n / (k+1) disjoint copies of K_{k+1}, when (k+1) | n
};

// n, k >= 1.
ErdosGallai erdos_gallai(int n, int k);

// Edges of floor(n/(k+1)) disjoint K_{k+1} plus a clique on the remainder,
// a graph with no path of k + 1 edges.
int clique_packing_edges(int n, int k);

}  // namespace rt

#endif  // RT_BRUTE_ORACLE_HPP_
