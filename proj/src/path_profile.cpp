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

#include "rt/path_profile.hpp"

#include <algorithm>
#include <iterator>

#include "rt/errors.hpp"

namespace rt {
namespace {

bool contains(const ColorList& set, Color c) { return std::binary_search(set.begin(), set.end(), c); }

ColorList normalized(ColorList v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

ColorList set_minus(const ColorList& a, const ColorList& b) {
  ColorList out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ColorList set_and(const ColorList& a, const ColorList& b) {
  ColorList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ColorList set_or(const ColorList& a, const ColorList& b) {
  ColorList out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Everything but `nice` and `residual`, which need the other end.
EndProfile one_end(const ColoredGraph& g, const RainbowPath& path, Vertex end,
                   const std::vector<int>& index_of, const ColorList& path_colors) {
  EndProfile p;
  const int k = path.length();
  p.chord.assign(k + 1, std::nullopt);
  for (const auto& nb : g.neighbors(end)) {
    p.all.push_back(nb.color);
    const int i = index_of[nb.vertex];
    if (i < 0) {
      p.outside.push_back(nb.color);
    } else {
      p.chord[i] = nb.color;
    }
  }
  p.all = normalized(std::move(p.all));
  p.outside = normalized(std::move(p.outside));
  p.inside = set_minus(p.all, p.outside);
  p.old = set_and(p.all, path_colors);
  p.fresh = set_minus(p.all, path_colors);
  return p;
}

int count_in(const EndProfile& p, int x, int y, const ColorList& kind) {
  int total = 0;
  for (int i = std::max(x, 0); i <= y && i < static_cast<int>(p.chord.size()); ++i) {
    if (p.chord[i] && contains(kind, *p.chord[i])) ++total;
  }
  return total;
}

}  // namespace

bool EndProfile::has_fresh_chord(int i) const {
  return i >= 0 && i < static_cast<int>(chord.size()) && chord[i] && contains(fresh, *chord[i]);
}

bool EndProfile::has_nice_chord(int i) const {
  return i >= 0 && i < static_cast<int>(chord.size()) && chord[i] && contains(nice, *chord[i]);
}

int PathProfile::left_fresh_in(int x, int y) const { return count_in(left, x, y, left.fresh); }
int PathProfile::left_nice_in(int x, int y) const { return count_in(left, x, y, left.nice); }
int PathProfile::right_fresh_in(int x, int y) const { return count_in(right, x, y, right.fresh); }
int PathProfile::right_nice_in(int x, int y) const { return count_in(right, x, y, right.nice); }

bool PathProfile::closing_edge_fresh() const {
  return left.has_fresh_chord(k) || right.has_fresh_chord(0);
}

PathProfile compute_profile(const ColoredGraph& g, const RainbowPath& path) {
  if (!is_rainbow(g, path)) throw PathError("path is not rainbow");
  if (path.length() < 1) throw PathError("profile needs a path with at least one edge");
  PathProfile p;
  p.path = path;
  p.k = path.length();
  const int k = p.k;

  std::vector<int> index_of(g.vertex_count(), -1);
  for (int i = 0; i <= k; ++i) index_of[path.vertices[i]] = i;
  const ColorList path_colors = normalized(path.colors);

  p.left = one_end(g, path, path.vertices.front(), index_of, path_colors);
  p.right = one_end(g, path, path.vertices.back(), index_of, path_colors);

  for (int j = 2; j <= k; ++j) {
    if (p.left.has_fresh_chord(j)) p.left.freed.push_back(p.path_color(j));
  }
  for (int j = 0; j <= k - 2; ++j) {
    if (p.right.has_fresh_chord(j)) p.right.freed.push_back(p.path_color(j + 1));
  }
  p.left.freed = normalized(std::move(p.left.freed));
  p.right.freed = normalized(std::move(p.right.freed));

  p.left.nice = set_and(p.left.all, p.right.freed);
  p.right.nice = set_and(p.right.all, p.left.freed);
  p.left.residual = set_minus(p.left.inside, set_or(p.left.fresh, p.left.nice));
  p.right.residual = set_minus(p.right.inside, set_or(p.right.fresh, p.right.nice));

  std::vector<int> right_fresh, left_fresh;
  for (int j = 0; j <= k; ++j) {
    if (p.right.has_fresh_chord(j)) right_fresh.push_back(j);
    if (p.left.has_fresh_chord(j)) left_fresh.push_back(j);
  }
  if (right_fresh.size() >= 2) {
    p.lowest = right_fresh[0];
    p.lower_pivot = right_fresh[1];
  }
  if (left_fresh.size() >= 2) {
    p.highest = left_fresh[left_fresh.size() - 1];
    p.upper_pivot = left_fresh[left_fresh.size() - 2];
  }
  return p;
}

std::vector<std::string> profile_identity_failures(const ColoredGraph& g, const PathProfile& p,
                                                   bool maximal) {
  std::vector<std::string> failures;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };
  const ColorList path_colors = normalized(p.path.colors);
  for (int side = 0; side < 2; ++side) {
    const EndProfile& e = side == 0 ? p.left : p.right;
    const EndProfile& other = side == 0 ? p.right : p.left;
    const std::string name = side == 0 ? "left" : "right";
    const Vertex end = side == 0 ? p.path.vertices.front() : p.path.vertices.back();
    expect(set_and(e.inside, e.outside).empty() && set_or(e.inside, e.outside) == e.all,
           name + ": all = inside ⊎ outside");
    expect(set_and(e.old, e.fresh).empty() && set_or(e.old, e.fresh) == e.all,
           name + ": all = old ⊎ fresh");
    expect(static_cast<int>(e.all.size()) == g.degree(end), name + ": |all| = degree");
    expect(e.nice == set_and(e.all, other.freed), name + ": nice = all ∩ other freed");
    expect(e.residual == set_minus(e.old, set_or(e.nice, e.outside)),
           name + ": residual = old \\ (nice ∪ outside)");
    expect(set_minus(e.freed, path_colors).empty(), name + ": freed ⊆ path colors");
    if (maximal) {
      expect(set_and(e.fresh, e.outside).empty(), name + ": fresh ∩ outside = ∅");
      expect(e.freed.size() == e.fresh.size(), name + ": |freed| = |fresh|");
    }
  }
  if (p.lowest) expect(*p.lowest < *p.lower_pivot, "lowest < lower_pivot");
  if (p.highest) expect(*p.upper_pivot < *p.highest, "upper_pivot < highest");
  return failures;
}

}  // namespace rt
