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

#include "rt/rainbow_search.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "rt/color_set.hpp"
#include "rt/errors.hpp"

namespace rt {

RainbowPath RainbowPath::reversed() const {
  RainbowPath r;
  r.vertices.assign(vertices.rbegin(), vertices.rend());
  r.colors.assign(colors.rbegin(), colors.rend());
  return r;
}

RainbowPath RainbowPath::canonical() const {
  if (!vertices.empty() && vertices.front() > vertices.back()) return reversed();
  return *this;
}

RainbowPath make_path(const ColoredGraph& g, std::span<const Vertex> vertices) {
  RainbowPath p;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || v >= g.vertex_count()) throw PathError("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw PathError("vertex " + std::to_string(v) + " repeats");
    seen[v] = true;
    if (i > 0) {
      auto c = g.color_of(vertices[i - 1], v);
      if (!c) {
        throw PathError("no edge " + std::to_string(vertices[i - 1]) + "-" + std::to_string(v));
      }
      p.colors.push_back(*c);
    }
    p.vertices.push_back(v);
  }
  return p;
}

bool is_rainbow(const ColoredGraph& g, const RainbowPath& path) {
  if (path.vertices.empty() ? !path.colors.empty()
                            : path.colors.size() + 1 != path.vertices.size()) {
    throw PathError("color count does not match vertex count");
  }
  const RainbowPath rebuilt = make_path(g, path.vertices);
  if (rebuilt.colors != path.colors) throw PathError("recorded colors disagree with the graph");
  return is_rainbow(g, std::span<const Vertex>(path.vertices));
}

bool is_rainbow(const ColoredGraph& g, std::span<const Vertex> vertices) {
  const RainbowPath p = make_path(g, vertices);
  std::vector<Color> sorted = p.colors;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

namespace {

// Shared DFS state for the two whole-graph searches.
class PathDfs {
 public:
  PathDfs(const ColoredGraph& g, SearchBudget budget)
      : g_(g), budget_(budget), colors_(g.color_count()), used_(g.vertex_count(), false) {}

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

  // Longest path. Returns false if the budget ran out.
  void longest() {
    const int cap = std::min(g_.vertex_count() - 1, g_.color_count());
    for (Vertex s = 0; s < g_.vertex_count() && !stop_; ++s) {
      walk_longest(s, cap);
    }
  }

  bool exact(int length) {
    target_ = length;
    for (Vertex s = 0; s < g_.vertex_count() && !stop_; ++s) walk_exact(s);
    return found_;
  }

  RainbowPath best;
  int best_length = -1;

 private:
  bool tick() {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > *budget_.max_nodes) {
      exhausted_ = true;
      stop_ = true;
      return false;
    }
    return true;
  }

  void push(Vertex v) {
    used_[v] = true;
    path_.vertices.push_back(v);
  }
  void pop() {
    used_[path_.vertices.back()] = false;
    path_.vertices.pop_back();
  }

  int slack(int length) const {
    return std::min(g_.vertex_count() - length - 1, g_.color_count() - length);
  }

  void walk_longest(Vertex v, int cap) {
    if (!tick()) return;
    push(v);
    const int length = path_.length();
    if (length > best_length) {
      best_length = length;
      best = path_;
      if (best_length == cap) stop_ = true;
    }
    if (!stop_ && length + slack(length) > best_length) {
      for (const auto& nb : g_.neighbors(v)) {
        if (used_[nb.vertex] || colors_.test(nb.color)) continue;
        colors_.set(nb.color);
        path_.colors.push_back(nb.color);
        walk_longest(nb.vertex, cap);
        path_.colors.pop_back();
        colors_.reset(nb.color);
        if (stop_) break;
      }
    }
    pop();
  }

  void walk_exact(Vertex v) {
    if (!tick()) return;
    push(v);
    const int length = path_.length();
    if (length == target_) {
      best = path_;
      best_length = length;
      found_ = true;
      stop_ = true;
    } else if (length + slack(length) >= target_) {
      for (const auto& nb : g_.neighbors(v)) {
        if (used_[nb.vertex] || colors_.test(nb.color)) continue;
        colors_.set(nb.color);
        path_.colors.push_back(nb.color);
        walk_exact(nb.vertex);
        path_.colors.pop_back();
        colors_.reset(nb.color);
        if (stop_) break;
      }
    }
    pop();
  }

  const ColoredGraph& g_;
  SearchBudget budget_;
  ColorSet colors_;
  std::vector<bool> used_;
  RainbowPath path_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool stop_ = false;
  bool found_ = false;
  int target_ = 0;
};

}  // namespace

SearchOutcome longest_rainbow_path(const ColoredGraph& g, SearchBudget budget) {
  PathDfs dfs(g, budget);
  dfs.longest();
  SearchOutcome out;
  // DFS visits prefixes in lexicographic order, so the first path reaching
  // the final length is the least one; it starts at the smallest endpoint
  // and is therefore already canonical.
  out.best = dfs.best.canonical();
  out.nodes_expanded = dfs.nodes();
  out.budget_exhausted = dfs.exhausted();
  out.proven_optimal = !dfs.exhausted();
  return out;
}

ExistenceOutcome has_rainbow_path(const ColoredGraph& g, int length, SearchBudget budget) {
  if (length < 1) throw PreconditionError("path length must be at least 1");
  ExistenceOutcome out;
  if (length > std::min(g.vertex_count() - 1, g.color_count())) {
    out.answer = Existence::kNo;
    return out;
  }
  PathDfs dfs(g, budget);
  const bool found = dfs.exact(length);
  out.nodes_expanded = dfs.nodes();
  if (found) {
    out.answer = Existence::kYes;
    out.witness = dfs.best.canonical();
  } else {
    out.answer = dfs.exhausted() ? Existence::kUnknown : Existence::kNo;
  }
  return out;
}

namespace {

// Subgraph induced on a sorted vertex set, re-indexed 0..s-1, with the
// colors present relabeled densely.
struct LocalGraph {
  std::vector<Vertex> global;
  std::vector<std::vector<Neighbor>> adjacency;
  int palette = 0;

  static LocalGraph build(const ColoredGraph& g, std::span<const Vertex> vertex_set, int guard) {
    LocalGraph local;
    local.global.assign(vertex_set.begin(), vertex_set.end());
    std::sort(local.global.begin(), local.global.end());
    if (std::adjacent_find(local.global.begin(), local.global.end()) != local.global.end()) {
      throw PreconditionError("vertex set contains duplicates");
    }
    if (static_cast<int>(local.global.size()) > guard) {
      throw GuardError("vertex set of size " + std::to_string(local.global.size()) +
                       " exceeds the guard of " + std::to_string(guard));
    }
    for (Vertex v : local.global) {
      if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex set outside the graph");
    }
    const int s = static_cast<int>(local.global.size());
    std::unordered_map<Color, Color> relabel;
    local.adjacency.assign(s, {});
    for (int i = 0; i < s; ++i) {
      for (int j = 0; j < s; ++j) {
        if (i == j) continue;
        if (auto c = g.color_of(local.global[i], local.global[j])) {
          auto [it, inserted] = relabel.emplace(*c, static_cast<Color>(relabel.size()));
          local.adjacency[i].push_back({j, it->second});
        }
      }
    }
    local.palette = static_cast<int>(relabel.size());
    return local;
  }

  RainbowPath to_global(const ColoredGraph& g, std::span<const int> local_vertices) const {
    std::vector<Vertex> vs;
    for (int i : local_vertices) vs.push_back(global[i]);
    return make_path(g, vs);
  }
};

}  // namespace

void enumerate_rainbow_paths_on(const ColoredGraph& g, std::span<const Vertex> vertex_set,
                                const std::function<bool(const RainbowPath&)>& sink, int guard) {
  const LocalGraph local = LocalGraph::build(g, vertex_set, guard);
  const int s = static_cast<int>(local.global.size());
  if (s == 0) return;
  std::vector<int> order;
  std::vector<bool> used(s, false);
  ColorSet colors(local.palette);
  bool stop = false;

  std::function<void(int)> walk = [&](int v) {
    used[v] = true;
    order.push_back(v);
    if (static_cast<int>(order.size()) == s) {
      if (s == 1 || order.front() < order.back()) {
        if (!sink(local.to_global(g, order))) stop = true;
      }
    } else {
      for (const auto& nb : local.adjacency[v]) {
        if (used[nb.vertex] || colors.test(nb.color)) continue;
        colors.set(nb.color);
        walk(nb.vertex);
        colors.reset(nb.color);
        if (stop) break;
      }
    }
    order.pop_back();
    used[v] = false;
  };
  for (int start = 0; start < s && !stop; ++start) walk(start);
}

std::vector<RainbowPath> collect_rainbow_paths_on(const ColoredGraph& g,
                                                  std::span<const Vertex> vertex_set, int guard) {
  std::vector<RainbowPath> out;
  enumerate_rainbow_paths_on(
      g, vertex_set,
      [&](const RainbowPath& p) {
        out.push_back(p);
        return true;
      },
      guard);
  return out;
}

namespace {

struct StateKey {
  std::uint32_t mask;
  std::uint32_t current;
  std::uint64_t colors_low;
  std::uint64_t colors_high;

  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = k.mask * 0x9E3779B97F4A7C15ull ^ k.current;
    h ^= k.colors_low + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h ^= k.colors_high + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

class EndpointSearch {
 public:
  explicit EndpointSearch(const LocalGraph& local)
      : local_(local), full_((std::uint32_t{1} << local.global.size()) - 1) {}

  // Bitmask of local vertices at which a spanning rainbow path continuing
  // from this state can end.
  std::uint32_t ends(std::uint32_t mask, int current, const ColorSet& colors) {
    if (mask == full_) return std::uint32_t{1} << current;
    // Colors that no remaining edge can carry do not affect the answer.
    const auto [keep_low, keep_high] = live_colors((full_ & ~mask) | (std::uint32_t{1} << current));
    const StateKey key{mask, static_cast<std::uint32_t>(current), colors.low() & keep_low,
                       colors.high() & keep_high};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::uint32_t result = 0;
    for (const auto& nb : local_.adjacency[current]) {
      if ((mask >> nb.vertex) & 1u || colors.test(nb.color)) continue;
      ColorSet next = colors;
      next.set(nb.color);
      result |= ends(mask | (std::uint32_t{1} << nb.vertex), nb.vertex, next);
    }
    memo_.emplace(key, result);
    return result;
  }

  // Least local vertex sequence from start to end; requires reachability.
  std::vector<int> trace(int start, int end) {
    std::vector<int> order{start};
    std::uint32_t mask = std::uint32_t{1} << start;
    ColorSet colors;
    int current = start;
    while (mask != full_) {
      bool advanced = false;
      for (const auto& nb : local_.adjacency[current]) {
        if ((mask >> nb.vertex) & 1u || colors.test(nb.color)) continue;
        ColorSet next = colors;
        next.set(nb.color);
        const std::uint32_t next_mask = mask | (std::uint32_t{1} << nb.vertex);
        if ((ends(next_mask, nb.vertex, next) >> end) & 1u) {
          mask = next_mask;
          colors = next;
          current = nb.vertex;
          order.push_back(current);
          advanced = true;
          break;
        }
      }
      if (!advanced) throw Error("endpoint trace lost its path");
    }
    return order;
  }

  std::size_t states() const { return memo_.size(); }

 private:
  // Colors on edges with both ends in `open`.
  std::pair<std::uint64_t, std::uint64_t> live_colors(std::uint32_t open) {
    if (auto it = live_.find(open); it != live_.end()) return it->second;
    ColorSet seen;
    for (int v = 0; v < static_cast<int>(local_.adjacency.size()); ++v) {
      if (!((open >> v) & 1u)) continue;
      for (const auto& nb : local_.adjacency[v]) {
        if ((open >> nb.vertex) & 1u) seen.set(nb.color);
      }
    }
    const std::pair<std::uint64_t, std::uint64_t> out{seen.low(), seen.high()};
    live_.emplace(open, out);
    return out;
  }

  const LocalGraph& local_;
  std::uint32_t full_;
  std::unordered_map<StateKey, std::uint32_t, StateKeyHash> memo_;
  std::unordered_map<std::uint32_t, std::pair<std::uint64_t, std::uint64_t>> live_;
};

}  // namespace

SpanningEndpoints SpanningEndpoints::compute(const ColoredGraph& g,
                                             std::span<const Vertex> vertex_set, int guard) {
  if (guard > 30) throw GuardError("spanning endpoint guard cannot exceed 30 vertices");
  const LocalGraph local = LocalGraph::build(g, vertex_set, guard);
  if (local.palette > ColorSet::kInlineBits) {
    throw GuardError("spanning endpoint search supports at most 128 colors on the vertex set");
  }
  SpanningEndpoints out;
  out.vertices_ = local.global;
  const int s = static_cast<int>(local.global.size());
  out.witness_.assign(static_cast<std::size_t>(s) * s, std::nullopt);
  if (s == 0) return out;
  EndpointSearch search(local);
  for (int start = 0; start < s; ++start) {
    const std::uint32_t reach = search.ends(std::uint32_t{1} << start, start, ColorSet{});
    for (int end = 0; end < s; ++end) {
      if ((reach >> end) & 1u) {
        out.witness_[static_cast<std::size_t>(start) * s + end] =
            local.to_global(g, search.trace(start, end));
      }
    }
  }
  out.memo_states_ = search.states();
  return out;
}

int SpanningEndpoints::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

const RainbowPath* SpanningEndpoints::witness(Vertex a, Vertex b) const {
  const int i = index_of(a), j = index_of(b);
  if (i < 0 || j < 0) return nullptr;
  const auto& w = witness_[static_cast<std::size_t>(i) * vertices_.size() + j];
  return w ? &*w : nullptr;
}

std::vector<Vertex> SpanningEndpoints::endpoints() const {
  std::vector<Vertex> out;
  const std::size_t s = vertices_.size();
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (witness_[i * s + j]) {
        out.push_back(vertices_[i]);
        break;
      }
    }
  }
  return out;
}

}  // namespace rt
