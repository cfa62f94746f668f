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

#ifndef RT_COLORED_GRAPH_HPP_
#define RT_COLORED_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rt {

using Vertex = int;
using Color = int;

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  Color color = 0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Bipartition tag for graphs that carry one.
enum class Side : std::uint8_t { kA = 0, kB = 1 };

// An uncolored edge set. Generators return skeletons; a ColoredGraph is only
// formed once every edge has a color.
struct Skeleton {
  int n = 0;
  std::vector<Edge> edges;
  std::optional<std::vector<Side>> sides;
};

// Simple undirected graph on vertices 0..n-1 with a total edge coloring by
// dense color ids 0..C-1. Immutable once built; every accessor is const.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  // Validates the data model: endpoints in range, no loops, no duplicate
  // pairs, colors non-negative and covering 0..C-1 without gaps. Edge
  // endpoints may be given in either order. Throws GraphError.
  static ColoredGraph create(int n, std::vector<ColoredEdge> edges,
                             std::optional<std::vector<Side>> sides = std::nullopt);

  // As create(), but first relabels the colors that occur onto 0..C-1
  // preserving their relative order.
  static ColoredGraph create_compacted(int n, std::vector<ColoredEdge> edges,
                                       std::optional<std::vector<Side>> sides = std::nullopt);

  // Pairs skeleton.edges[i] with colors[i].
  static ColoredGraph from_skeleton(const Skeleton& skeleton, std::span<const Color> colors);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int color_count() const { return colors_; }

  // Sorted by (u, v) with u < v.
  std::span<const ColoredEdge> edges() const { return edges_; }
  // Sorted by neighbor id.
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int min_degree() const;
  int max_degree() const;

  std::optional<Color> color_of(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return color_of(u, v).has_value(); }

  const std::optional<std::vector<Side>>& sides() const { return sides_; }

  // Subgraph induced on `keep`; vertex i of the result is keep[i]. Colors
  // are compacted. Sides are carried over when present.
  ColoredGraph induced(std::span<const Vertex> keep) const;

  Skeleton skeleton() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.sides_ == b.sides_;
  }

 private:
  int n_ = 0;
  int colors_ = 0;
  std::vector<ColoredEdge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::optional<std::vector<Side>> sides_;
};

struct ColorConflict {
  Vertex vertex = 0;
  Color color = 0;
  Edge first;
  Edge second;

  friend bool operator==(const ColorConflict&, const ColorConflict&) = default;
};

struct ProperColoringReport {
  bool is_proper = true;
  std::vector<ColorConflict> violations;
};

// Lists every pair of same-colored edges sharing a vertex.
ProperColoringReport validate_proper(const ColoredGraph& g);

// Vertex-disjoint union, copies laid out in order. With share_colors the
// color ids of each copy are kept; otherwise copy i's colors are shifted past
// those of copies 0..i-1.
ColoredGraph disjoint_union(std::span<const ColoredGraph> graphs, bool share_colors);

Skeleton complete_graph(int n);
// Sides 0..a-1 are kA, a..a+b-1 are kB.
Skeleton complete_bipartite(int a, int b);

// Round-robin 1-factorization of K_n: n-1 colors for even n, n colors for
// odd n (each color class a near-perfect matching).
ColoredGraph one_factorization(int n);

// Path 0-1-...-(n-1) with edge i colored i.
ColoredGraph rainbow_path_graph(int n);

}  // namespace rt

#endif  // RT_COLORED_GRAPH_HPP_
