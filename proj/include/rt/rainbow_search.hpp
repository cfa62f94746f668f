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

#ifndef RT_RAINBOW_SEARCH_HPP_
#define RT_RAINBOW_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rt/colored_graph.hpp"

namespace rt {

// Vertex sequence v0..vl with colors[i] = color of edge v_i v_{i+1}.
struct RainbowPath {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  int length() const { return static_cast<int>(colors.size()); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  RainbowPath reversed() const;
  // Orientation with the smaller endpoint first.
  RainbowPath canonical() const;

  friend bool operator==(const RainbowPath&, const RainbowPath&) = default;
};

// Builds a path record from a vertex sequence, reading colors from g.
// Throws PathError if a vertex repeats, is out of range, or consecutive
// vertices are not adjacent.
RainbowPath make_path(const ColoredGraph& g, std::span<const Vertex> vertices);

// True iff the path's edge colors are pairwise distinct. Throws PathError
// when the record is not a path of g (repeated vertex, missing edge, or a
// recorded color that disagrees with g).
bool is_rainbow(const ColoredGraph& g, const RainbowPath& path);
bool is_rainbow(const ColoredGraph& g, std::span<const Vertex> vertices);

struct SearchBudget {
  // Maximum DFS nodes; nullopt is unlimited.
  std::optional<std::uint64_t> max_nodes;
};

struct SearchOutcome {
  RainbowPath best;
  bool proven_optimal = false;
  std::uint64_t nodes_expanded = 0;
  bool budget_exhausted = false;
};

// Exhaustive DFS with used-vertex and used-color sets, pruning any branch
// whose remaining vertex/color capacity cannot beat the incumbent. Among
// longest paths the lexicographically least canonical one is returned.
SearchOutcome longest_rainbow_path(const ColoredGraph& g, SearchBudget budget = {});

enum class Existence { kYes, kNo, kUnknown };

struct ExistenceOutcome {
  Existence answer = Existence::kUnknown;
  std::optional<RainbowPath> witness;  // set iff answer == kYes
  std::uint64_t nodes_expanded = 0;
};

// Is there a rainbow path with exactly `length` edges? Requires length >= 1.
// Budget exhaustion yields kUnknown, never a silent kNo.
ExistenceOutcome has_rainbow_path(const ColoredGraph& g, int length, SearchBudget budget = {});

inline constexpr int kDefaultVertexSetGuard = 16;

// Calls `sink` once for every rainbow path whose vertex set is exactly
// `vertex_set`, in canonical orientation, in lexicographic order. Stops early
// when `sink` returns false. Throws GuardError when the set exceeds `guard`.
void enumerate_rainbow_paths_on(const ColoredGraph& g, std::span<const Vertex> vertex_set,
                                const std::function<bool(const RainbowPath&)>& sink,
                                int guard = kDefaultVertexSetGuard);

std::vector<RainbowPath> collect_rainbow_paths_on(const ColoredGraph& g,
                                                  std::span<const Vertex> vertex_set,
                                                  int guard = kDefaultVertexSetGuard);

// Endpoint pairs of all rainbow paths spanning exactly a vertex set, with one
// witness per ordered pair. Computed by memoized search over
// (visited set, current vertex, used colors), so it does not enumerate every
// path the way enumerate_rainbow_paths_on does.
class SpanningEndpoints {
 public:
  static SpanningEndpoints compute(const ColoredGraph& g, std::span<const Vertex> vertex_set,
                                   int guard = kDefaultVertexSetGuard);

  // Sorted ascending.
  std::span<const Vertex> vertices() const { return vertices_; }
  bool connected(Vertex a, Vertex b) const { return witness(a, b) != nullptr; }
  // Lexicographically least witness running from a to b, or nullptr.
  const RainbowPath* witness(Vertex a, Vertex b) const;
  // Vertices that end at least one spanning rainbow path, ascending.
  std::vector<Vertex> endpoints() const;
  std::size_t memo_states() const { return memo_states_; }

 private:
  int index_of(Vertex v) const;

  std::vector<Vertex> vertices_;
  std::vector<std::optional<RainbowPath>> witness_;  // s*s, row = start
  std::size_t memo_states_ = 0;
};

}  // namespace rt

#endif  // RT_RAINBOW_SEARCH_HPP_
