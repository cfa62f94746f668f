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

#include "rt/matching.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace rt {

std::vector<std::pair<int, int>> maximum_matching(int n, std::span<const std::pair<int, int>> edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using Descriptor = boost::graph_traits<Graph>::vertex_descriptor;
  Graph graph(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) boost::add_edge(u, v, graph);
  std::vector<Descriptor> mate(static_cast<std::size_t>(n));
  boost::edmonds_maximum_cardinality_matching(graph, mate.data());
  std::vector<std::pair<int, int>> out;
  const Descriptor none = boost::graph_traits<Graph>::null_vertex();
  for (int u = 0; u < n; ++u) {
    if (mate[u] != none && static_cast<int>(mate[u]) > u) out.emplace_back(u, static_cast<int>(mate[u]));
  }
  return out;
}

bool MatchingReport::meets_min_degree_bound() const {
  return m >= std::min(aux_min_degree, aux_vertex_count / 2);
}

std::vector<Vertex> MatchingReport::matched_vertices() const {
  std::vector<Vertex> out;
  for (const auto& p : pairs) {
    out.push_back(p.a);
    out.push_back(p.b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MatchingReport find_matching(const ColoredGraph& g, const RainbowPath& base, const AuxGraph& h) {
  std::vector<std::pair<int, int>> local_edges;
  auto local = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), v) -
                            h.vertices.begin());
  };
  for (const auto& e : h.edges) local_edges.emplace_back(local(e.u), local(e.v));

  MatchingReport report;
  report.aux_vertex_count = static_cast<int>(h.vertices.size());
  report.aux_min_degree = h.min_degree();
  for (const auto& [i, j] : maximum_matching(report.aux_vertex_count, local_edges)) {
    MatchedPair pair{h.vertices[i], h.vertices[j], 0};
    for (Vertex x : {pair.a, pair.b}) {
      for (Vertex y : base.vertices) {
        if (y != pair.a && y != pair.b && !g.adjacent(x, y)) ++pair.non_edges;
      }
    }
    report.pairs.push_back(pair);
  }
  report.m = static_cast<int>(report.pairs.size());

  std::vector<bool> in_matching(g.vertex_count(), false);
  for (Vertex v : report.matched_vertices()) in_matching[v] = true;
  for (const auto& e : g.edges()) {
    const bool a = in_matching[e.u], b = in_matching[e.v];
    report.induced_edges += a && b;
    report.incident_edges += a || b;
  }
  return report;
}

}  // namespace rt
