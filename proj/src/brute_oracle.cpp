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

#include "rt/brute_oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>

#include "rt/errors.hpp"

namespace rt {

namespace {

// Colors a fixed edge list one edge at a time with restricted-growth color
// ids, tracking whether a rainbow path of the target length has appeared.
class EdgeColorer {
 public:
  EdgeColorer(int n, std::vector<Edge> edges, int path_length)
      : edges_(std::move(edges)),
        length_(path_length),
        color_(edges_.size(), -1),
        at_(n),
        vertex_colors_(n, 0) {
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      at_[edges_[e].u].push_back(e);
      at_[edges_[e].v].push_back(e);
    }
  }

  // First coloring with no rainbow path, in enumeration order.
  std::optional<std::vector<Color>> find_avoiding() {
    avoid_ = true;
    found_.reset();
    descend(0, 0, false);
    return found_;
  }

  template <typename Visit>
  void for_each(Visit&& visit) {
    avoid_ = false;
    visit_ = std::forward<Visit>(visit);
    descend(0, 0, false);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Vertex other(int e, Vertex v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  bool grow(Vertex left, Vertex right, std::uint64_t vmask, std::uint64_t cmask, int len,
            bool right_phase) const {
    if (len == length_) return true;
    if (!right_phase) {
      for (int e : at_[left]) {
        const int c = color_[e];
        const Vertex w = other(e, left);
        if (c < 0 || (vmask >> w & 1) || (cmask >> c & 1)) continue;
        if (grow(w, right, vmask | bit(w), cmask | bit(c), len + 1, false)) return true;
      }
    }
    for (int e : at_[right]) {
      const int c = color_[e];
      const Vertex w = other(e, right);
      if (c < 0 || (vmask >> w & 1) || (cmask >> c & 1)) continue;
      if (grow(left, w, vmask | bit(w), cmask | bit(c), len + 1, true)) return true;
    }
    return false;
  }

  bool rainbow_through(int e) const {
    const Edge& edge = edges_[e];
    return grow(edge.u, edge.v, bit(edge.u) | bit(edge.v), bit(color_[e]), 1, false);
  }

  static std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

  // Returns true to stop the search.
  bool descend(int index, int used, bool contains) {
    ++nodes_;
    if (index == static_cast<int>(edges_.size())) {
      if (avoid_) {
        found_ = std::vector<Color>(color_.begin(), color_.end());
        return true;
      }
      visit_(color_, contains);
      return false;
    }
    const Edge& e = edges_[index];
    const std::uint64_t blocked = vertex_colors_[e.u] | vertex_colors_[e.v];
    for (int c = 0; c <= used && c < 64; ++c) {
      if (blocked >> c & 1) continue;
      color_[index] = c;
      vertex_colors_[e.u] |= bit(c);
      vertex_colors_[e.v] |= bit(c);
      const bool now = contains || rainbow_through(index);
      const bool stop = (avoid_ && now) ? false : descend(index + 1, c == used ? used + 1 : used, now);
      vertex_colors_[e.u] &= ~bit(c);
      vertex_colors_[e.v] &= ~bit(c);
      color_[index] = -1;
      if (stop) return true;
    }
    return false;
  }

  std::vector<Edge> edges_;
  int length_;
  std::vector<int> color_;
  std::vector<std::vector<int>> at_;
  std::vector<std::uint64_t> vertex_colors_;
  bool avoid_ = true;
  std::optional<std::vector<Color>> found_;
  std::function<void(const std::vector<int>&, bool)> visit_;
  std::uint64_t nodes_ = 0;
};

ColoredGraph build(int n, const std::vector<Edge>& edges, const std::vector<Color>& colors) {
  std::vector<ColoredEdge> colored;
  for (std::size_t i = 0; i < edges.size(); ++i) colored.push_back({edges[i].u, edges[i].v, colors[i]});
  return ColoredGraph::create(n, std::move(colored));
}

// Next integer with the same popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t smallest = x & -x;
  const std::uint64_t ripple = x + smallest;
  return ripple | (((x ^ ripple) >> 2) / smallest);
}

}  // namespace

ExStarResult exstar_small(int n, int path_length, int guard) {
  if (n < 1) throw PreconditionError("exstar needs at least one vertex");
  if (path_length < 2) throw PreconditionError("exstar needs a path length of at least 2");
  if (guard > 8) throw GuardError("exstar guard cannot exceed 8 vertices");
  if (n > guard) {
    throw GuardError("exstar on " + std::to_string(n) + " vertices exceeds the guard of " +
                     std::to_string(guard));
  }

  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  const int total = static_cast<int>(pairs.size());

  ExStarResult result;
  result.n = n;
  result.path_length = path_length;
  for (int m = total; m >= 0; --m) {
    const std::uint64_t limit = std::uint64_t{1} << total;
    for (std::uint64_t set = (std::uint64_t{1} << m) - 1; set < limit;
         set = m == 0 ? limit : next_combination(set)) {
      std::vector<int> degree(n, 0);
      std::vector<Edge> edges;
      for (int i = 0; i < total; ++i) {
        if (set >> i & 1) {
          edges.push_back(pairs[i]);
          ++degree[pairs[i].u];
          ++degree[pairs[i].v];
        }
      }
      if (!std::is_sorted(degree.rbegin(), degree.rend())) continue;
      ++result.graphs_examined;
      EdgeColorer colorer(n, edges, path_length);
      const auto colors = colorer.find_avoiding();
      result.coloring_nodes += colorer.nodes();
      if (colors) {
        result.value = m;
        result.witness = build(n, edges, *colors);
        return result;
      }
    }
  }
  throw Error("exstar search ended without a witness");
}

ColoringEnumeration forall_proper_colorings(const ColoredGraph& g, int path_length, int max_edges) {
  if (path_length < 1) throw PreconditionError("path length must be at least 1");
  if (g.edge_count() > max_edges) {
    throw GuardError("coloring enumeration on " + std::to_string(g.edge_count()) +
                     " edges exceeds the guard of " + std::to_string(max_edges));
  }
  if (g.vertex_count() > 64) throw GuardError("coloring enumeration supports at most 64 vertices");

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});

  ColoringEnumeration out;
  out.target = g;
  out.path_length = path_length;
  EdgeColorer colorer(g.vertex_count(), edges, path_length);
  colorer.for_each([&](const std::vector<int>& colors, bool contains) {
    ++out.count;
    out.verdicts.push_back(contains);
    if (contains) {
      ++out.with_rainbow_path;
    } else {
      ++out.without_rainbow_path;
      if (!out.first_counterexample) out.first_counterexample = build(g.vertex_count(), edges, colors);
    }
  });
  return out;
}

ErdosGallai erdos_gallai(int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("erdos_gallai needs n, k >= 1");
  ErdosGallai out;
  out.bound = rat(static_cast<std::int64_t>(k) * n, 2);
  if (n % (k + 1) == 0) {
    Skeleton s;
    s.n = n;
    for (int base = 0; base < n; base += k + 1) {
      for (int u = base; u < base + k + 1; ++u) {
        for (int v = u + 1; v < base + k + 1; ++v) s.edges.push_back({u, v});
      }
    }
    out.extremal = std::move(s);
  }
  return out;
}

int clique_packing_edges(int n, int k) {
  const int size = k + 1;
  const int rest = n % size;
  return (n / size) * size * (size - 1) / 2 + rest * (rest - 1) / 2;
}

}  // namespace rt
