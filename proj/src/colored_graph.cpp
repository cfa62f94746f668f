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

#include "rt/colored_graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rt/errors.hpp"

namespace rt {

ColoredGraph ColoredGraph::create(int n, std::vector<ColoredEdge> edges,
                                  std::optional<std::vector<Side>> sides) {
  if (n < 0) throw GraphError("negative vertex count");
  if (sides && static_cast<int>(sides->size()) != n) {
    throw GraphError("side tags do not match vertex count");
  }
  Color max_color = -1;
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.color < 0) throw GraphError("negative color id");
    if (e.u > e.v) std::swap(e.u, e.v);
    max_color = std::max(max_color, e.color);
  }
  std::sort(edges.begin(), edges.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw GraphError("multi-edge " + std::to_string(edges[i].u) + " " +
                       std::to_string(edges[i].v));
    }
  }
  std::vector<bool> used(static_cast<std::size_t>(max_color + 1), false);
  for (const auto& e : edges) used[e.color] = true;
  for (Color c = 0; c <= max_color; ++c) {
    if (!used[c]) throw GraphError("color ids are not contiguous: " + std::to_string(c) + " unused");
  }

  ColoredGraph g;
  g.n_ = n;
  g.colors_ = max_color + 1;
  g.edges_ = std::move(edges);
  g.sides_ = std::move(sides);
  g.adjacency_.assign(n, {});
  for (const auto& e : g.edges_) {
    g.adjacency_[e.u].push_back({e.v, e.color});
    g.adjacency_[e.v].push_back({e.u, e.color});
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
  return g;
}

ColoredGraph ColoredGraph::create_compacted(int n, std::vector<ColoredEdge> edges,
                                            std::optional<std::vector<Side>> sides) {
  std::map<Color, Color> relabel;
  for (const auto& e : edges) relabel.emplace(e.color, 0);
  Color next = 0;
  for (auto& [from, to] : relabel) to = next++;
  for (auto& e : edges) e.color = relabel.at(e.color);
  return create(n, std::move(edges), std::move(sides));
}

ColoredGraph ColoredGraph::from_skeleton(const Skeleton& skeleton, std::span<const Color> colors) {
  if (colors.size() != skeleton.edges.size()) {
    throw GraphError("coloring must assign exactly one color per edge");
  }
  std::vector<ColoredEdge> edges;
  edges.reserve(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    edges.push_back({skeleton.edges[i].u, skeleton.edges[i].v, colors[i]});
  }
  return create(skeleton.n, std::move(edges), skeleton.sides);
}

int ColoredGraph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int ColoredGraph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<Color> ColoredGraph::color_of(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.vertex < x; });
  if (it == list.end() || it->vertex != v) return std::nullopt;
  return it->color;
}

ColoredGraph ColoredGraph::induced(std::span<const Vertex> keep) const {
  std::vector<int> position(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<int>(i);
  std::vector<ColoredEdge> kept;
  for (const auto& e : edges_) {
    if (position[e.u] >= 0 && position[e.v] >= 0) {
      kept.push_back({position[e.u], position[e.v], e.color});
    }
  }
  std::optional<std::vector<Side>> sides;
  if (sides_) {
    sides.emplace();
    for (Vertex v : keep) sides->push_back((*sides_)[v]);
  }
  return create_compacted(static_cast<int>(keep.size()), std::move(kept), std::move(sides));
}

Skeleton ColoredGraph::skeleton() const {
  Skeleton s;
  s.n = n_;
  s.sides = sides_;
  for (const auto& e : edges_) s.edges.push_back({e.u, e.v});
  return s;
}

ProperColoringReport validate_proper(const ColoredGraph& g) {
  ProperColoringReport report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::map<Color, std::vector<Vertex>> by_color;
    for (const auto& nb : g.neighbors(v)) by_color[nb.color].push_back(nb.vertex);
    for (const auto& [color, ends] : by_color) {
      for (std::size_t i = 0; i < ends.size(); ++i) {
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
          report.violations.push_back({v, color, Edge{std::min(v, ends[i]), std::max(v, ends[i])},
                                       Edge{std::min(v, ends[j]), std::max(v, ends[j])}});
        }
      }
    }
  }
  report.is_proper = report.violations.empty();
  return report;
}

ColoredGraph disjoint_union(std::span<const ColoredGraph> graphs, bool share_colors) {
  std::vector<ColoredEdge> edges;
  std::vector<Side> sides;
  bool all_sided = !graphs.empty();
  int offset = 0;
  int color_offset = 0;
  for (const auto& g : graphs) {
    for (const auto& e : g.edges()) {
      edges.push_back({e.u + offset, e.v + offset, e.color + (share_colors ? 0 : color_offset)});
    }
    if (g.sides()) {
      sides.insert(sides.end(), g.sides()->begin(), g.sides()->end());
    } else {
      all_sided = false;
    }
    offset += g.vertex_count();
    color_offset += g.color_count();
  }
  std::optional<std::vector<Side>> tags;
  if (all_sided) tags = std::move(sides);
  // Shared palettes need not be contiguous when copies use different
  // color ranges, so compact.
  return ColoredGraph::create_compacted(offset, std::move(edges), std::move(tags));
}

Skeleton complete_graph(int n) {
  Skeleton s;
  s.n = n;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) s.edges.push_back({u, v});
  }
  return s;
}

Skeleton complete_bipartite(int a, int b) {
  Skeleton s;
  s.n = a + b;
  s.sides.emplace(a + b, Side::kA);
  for (int i = a; i < a + b; ++i) (*s.sides)[i] = Side::kB;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) s.edges.push_back({u, v});
  }
  return s;
}

ColoredGraph one_factorization(int n) {
  Skeleton s = complete_graph(n);
  std::vector<Color> colors;
  colors.reserve(s.edges.size());
  if (n % 2 == 1) {
    for (const auto& e : s.edges) colors.push_back((e.u + e.v) % n);
  } else {
    const int mod = n - 1;
    for (const auto& e : s.edges) {
      colors.push_back(e.v == n - 1 ? (2 * e.u) % mod : (e.u + e.v) % mod);
    }
  }
  return ColoredGraph::from_skeleton(s, colors);
}

ColoredGraph rainbow_path_graph(int n) {
  std::vector<ColoredEdge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, v});
  return ColoredGraph::create(n, std::move(edges));
}

}  // namespace rt
