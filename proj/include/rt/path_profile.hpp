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

#ifndef RT_PATH_PROFILE_HPP_
#define RT_PATH_PROFILE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rt/colored_graph.hpp"
#include "rt/rainbow_search.hpp"

namespace rt {

// Sorted, duplicate-free.
using ColorList = std::vector<Color>;

// Color sets seen from one end of a rainbow path v0..vk. For the left end
// (v0):
//   all       colors at v0
//   outside   colors of edges from v0 to vertices off the path
//   inside    all \ outside
//   old       all ∩ {path colors}
//   fresh     all \ {path colors}
//   freed     path colors c_j of edges v_{j-1}v_j such that the chord v0v_j
//             is fresh (2 <= j <= k); rotating along that chord frees c_j
//   nice      all ∩ (freed set of the other end)
//   residual  inside \ (fresh ∪ nice)
// The right end (vk) mirrors this with freed colors c_{j+1} of chords vk v_j,
// 0 <= j <= k-2.
struct EndProfile {
  ColorList all;
  ColorList outside;
  ColorList inside;
  ColorList old;
  ColorList fresh;
  ColorList freed;
  ColorList nice;
  ColorList residual;
  // chord[i]: color of the edge from this end to v_i, when present.
  std::vector<std::optional<Color>> chord;

  bool has_fresh_chord(int i) const;
  bool has_nice_chord(int i) const;
};

struct PathProfile {
  RainbowPath path;
  int k = 0;
  EndProfile left;
  EndProfile right;

  // lowest < lower_pivot: the two smallest indices j with a fresh chord
  // v_k v_j. upper_pivot < highest: the two largest indices j with a fresh
  // chord v_0 v_j. Absent when fewer than two such indices exist.
  std::optional<int> lowest;
  std::optional<int> lower_pivot;
  std::optional<int> upper_pivot;
  std::optional<int> highest;

  bool pivots_present() const { return lower_pivot.has_value() && upper_pivot.has_value(); }

  // Counts of chords from v0 (left) or vk (right) landing at indices in
  // [x, y] whose color is fresh / nice for that end. Empty range when x > y.
  int left_fresh_in(int x, int y) const;
  int left_nice_in(int x, int y) const;
  int right_fresh_in(int x, int y) const;
  int right_nice_in(int x, int y) const;

  // Color of v0 vk, when that edge exists, is fresh at either end.
  bool closing_edge_fresh() const;

  // Color of path edge v_{i-1} v_i, 1 <= i <= k.
  Color path_color(int i) const { return path.colors[i - 1]; }
  Vertex at(int i) const { return path.vertices[i]; }
};

// Requires a rainbow path of g with at least one edge; throws PathError
// otherwise.
PathProfile compute_profile(const ColoredGraph& g, const RainbowPath& path);

// Identities every profile must satisfy. Returns a description of each one
// that fails. `maximal` additionally enables those that rely on the path not
// being extendable (no fresh color leaves the path).
std::vector<std::string> profile_identity_failures(const ColoredGraph& g, const PathProfile& profile,
                                                   bool maximal);

}  // namespace rt

#endif  // RT_PATH_PROFILE_HPP_
