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

#ifndef RT_MATCHING_HPP_
#define RT_MATCHING_HPP_

#include <span>
#include <utility>
#include <vector>

#include "rt/colored_graph.hpp"
#include "rt/rainbow_search.hpp"
#include "rt/terminals.hpp"

namespace rt {

// Maximum-cardinality matching of a general graph on vertices 0..n-1.
// Pairs come back as (u, v) with u < v, sorted.
std::vector<std::pair<int, int>> maximum_matching(int n, std::span<const std::pair<int, int>> edges);

struct MatchedPair {
  Vertex a = 0;
  Vertex b = 0;
  // Non-adjacent pairs xy of G with x in {a, b} and y in V(P*) \ {a, b}.
  int non_edges = 0;
};

struct MatchingReport {
  std::vector<MatchedPair> pairs;
  int m = 0;
  int aux_min_degree = 0;
  int aux_vertex_count = 0;
  // Edges of G with both ends in V(M).
  int induced_edges = 0;
  // Edges of G with at least one end in V(M).
  int incident_edges = 0;

  // m >= min(min degree of H, floor(|V(H)| / 2)).
  bool meets_min_degree_bound() const;
  std::vector<Vertex> matched_vertices() const;
};

// Maximum matching of h, measured against g and the base path h was built on.
MatchingReport find_matching(const ColoredGraph& g, const RainbowPath& base, const AuxGraph& h);

}  // namespace rt

#endif  // RT_MATCHING_HPP_
