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

#include "rt/terminals.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "rt/errors.hpp"

namespace rt {

const char* to_string(DerivationMode mode) {
  return mode == DerivationMode::kRuleDerived ? "rule" : "oracle";
}

int TerminalAnalysis::size() const {
  return static_cast<int>(std::count_if(members.begin(), members.end(),
                                        [](const auto& m) { return m.has_value(); }));
}

bool TerminalAnalysis::contains_index(int i) const {
  return i >= 0 && i < static_cast<int>(members.size()) && members[i].has_value();
}

bool TerminalAnalysis::contains(Vertex v) const {
  for (std::size_t i = 0; i < base.vertices.size(); ++i) {
    if (base.vertices[i] == v) return members[i].has_value();
  }
  return false;
}

int TerminalAnalysis::count_in(int x, int y) const {
  int total = 0;
  for (int i = std::max(x, 0); i <= y && i < static_cast<int>(members.size()); ++i) {
    total += members[i].has_value();
  }
  return total;
}

std::vector<Vertex> TerminalAnalysis::vertices() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i]) out.push_back(base.vertices[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Validates candidate spanning paths against the base and records them.
class WitnessGate {
 public:
  WitnessGate(const ColoredGraph& g, const RainbowPath& base, const RuleOptions& options)
      : g_(g), options_(options), k_(base.length()), span_(base.vertices) {
    std::sort(span_.begin(), span_.end());
  }

  RainbowPath validate(std::vector<Vertex> seq, const std::string& rule) {
    const std::string base_rule = rule.substr(0, rule.find('/'));
    if (!corrupted_ && !options_.corrupt_rule.empty() && options_.corrupt_rule == base_rule &&
        seq.size() >= 2) {
      seq[1] = seq[0];
      corrupted_ = true;
    }
    RainbowPath path;
    try {
      path = make_path(g_, seq);
    } catch (const PathError& e) {
      throw SoundnessError(rule, e.what());
    }
    if (!is_rainbow(g_, path)) throw SoundnessError(rule, "witness repeats a color");
    if (path.length() != k_) throw SoundnessError(rule, "witness has the wrong length");
    std::vector<Vertex> sorted = path.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != span_) throw SoundnessError(rule, "witness does not span the base vertex set");
    return path;
  }

  bool spans(Vertex v) const { return std::binary_search(span_.begin(), span_.end(), v); }

 private:
  const ColoredGraph& g_;
  const RuleOptions& options_;
  int k_;
  std::vector<Vertex> span_;
  bool corrupted_ = false;
};

// seq helpers over path indices of a profile
void append_run(std::vector<Vertex>& seq, const PathProfile& p, int from, int to) {
  if (from <= to) {
    for (int i = from; i <= to; ++i) seq.push_back(p.at(i));
  } else {
    for (int i = from; i >= to; --i) seq.push_back(p.at(i));
  }
}

class RuleEngine {
 public:
  RuleEngine(const ColoredGraph& g, const PathProfile& profile, const RuleOptions& options)
      : gate_(g, profile.path, options), base_(profile.path) {
    analysis_.mode = DerivationMode::kRuleDerived;
    analysis_.base = profile.path;
    analysis_.members.assign(profile.path.vertices.size(), std::nullopt);
    for (int i = 0; i <= profile.k; ++i) index_[profile.at(i)] = i;
  }

  void apply(const PathProfile& p, const std::string& suffix) {
    const int k = p.k;
    propose({p.path.vertices.begin(), p.path.vertices.end()}, rules::kEndpoint + suffix);

    if (p.closing_edge_fresh()) {
      for (int i = 0; i < k; ++i) {
        std::vector<Vertex> seq;
        append_run(seq, p, i, 0);
        append_run(seq, p, k, i + 1);
        propose(std::move(seq), rules::kClosingJump + suffix);
      }
    }

    for (int i = 2; i <= k; ++i) {
      if (!p.left.has_fresh_chord(i)) continue;
      std::vector<Vertex> seq;
      append_run(seq, p, i - 1, 0);
      append_run(seq, p, i, k);
      propose(std::move(seq), rules::kFreshChord + suffix);
    }

    for (int i = 1; i <= k; ++i) {
      if (!p.left.has_nice_chord(i)) continue;
      const Color c = *p.left.chord[i];
      std::optional<int> pair;
      for (int j = 0; j <= k - 2; ++j) {
        if (p.path_color(j + 1) == c && p.right.has_fresh_chord(j)) pair = j;
      }
      if (!pair) continue;
      const int j = *pair;
      std::vector<Vertex> seq;
      if (j >= i) {
        append_run(seq, p, i - 1, 0);
        append_run(seq, p, i, j);
        append_run(seq, p, k, j + 1);
      } else if (i <= k - 1) {
        append_run(seq, p, j + 1, i);
        append_run(seq, p, 0, j);
        append_run(seq, p, k, i + 1);
      } else {
        continue;
      }
      propose(std::move(seq), rules::kNiceChord + suffix);
    }

    if (p.pivots_present() && *p.lower_pivot <= *p.upper_pivot) {
      const int a = *p.lower_pivot, a_prime = *p.lowest;
      for (int i = a; i <= *p.upper_pivot; ++i) {
        if (!p.left.has_fresh_chord(i)) continue;
        std::vector<Vertex> seq;
        if (i == a) {
          append_run(seq, p, i + 1, k);
          append_run(seq, p, i, 0);
        } else {
          const int pivot = *p.right.chord[a] != *p.left.chord[i] ? a : a_prime;
          append_run(seq, p, pivot + 1, i);
          append_run(seq, p, 0, pivot);
          append_run(seq, p, k, i + 1);
        }
        propose(std::move(seq), rules::kTwoSided + suffix);
      }
    }
  }

  TerminalAnalysis take() { return std::move(analysis_); }

 private:
  void propose(std::vector<Vertex> seq, const std::string& rule) {
    RainbowPath path = gate_.validate(std::move(seq), rule);
    auto& slot = analysis_.members[index_.at(path.front())];
    if (!slot) slot = TerminalWitness{std::move(path), rule};
  }

  WitnessGate gate_;
  RainbowPath base_;
  TerminalAnalysis analysis_;
  std::map<Vertex, int> index_;
};

}  // namespace

TerminalAnalysis terminal_rules(const ColoredGraph& g, const PathProfile& profile,
                                const RuleOptions& options) {
  RuleEngine engine(g, profile, options);
  engine.apply(profile, "");
  engine.apply(compute_profile(g, profile.path.reversed()), "/mirror");
  return engine.take();
}

TerminalAnalysis terminal_oracle(const ColoredGraph& g, const RainbowPath& base, int guard) {
  return terminal_oracle(base, SpanningEndpoints::compute(g, base.vertices, guard));
}

TerminalAnalysis terminal_oracle(const RainbowPath& base, const SpanningEndpoints& endpoints) {
  TerminalAnalysis t;
  t.mode = DerivationMode::kOracleExact;
  t.base = base;
  t.members.assign(base.vertices.size(), std::nullopt);
  for (std::size_t i = 0; i < base.vertices.size(); ++i) {
    for (Vertex other : endpoints.vertices()) {
      if (const RainbowPath* w = endpoints.witness(base.vertices[i], other)) {
        t.members[i] = TerminalWitness{*w, "oracle"};
        break;
      }
    }
  }
  return t;
}

bool AuxGraph::has_edge(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{a, b},
                             [](const AuxEdge& e, const std::pair<Vertex, Vertex>& key) {
                               return std::pair{e.u, e.v} < key;
                             });
  return it != edges.end() && it->u == a && it->v == b;
}

int AuxGraph::degree(Vertex v) const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(), [v](const AuxEdge& e) { return e.u == v || e.v == v; }));
}

int AuxGraph::min_degree() const {
  if (vertices.empty()) return 0;
  int best = degree(vertices.front());
  for (Vertex v : vertices) best = std::min(best, degree(v));
  return best;
}

AuxGraph aux_graph_from_endpoints(const SpanningEndpoints& endpoints) {
  AuxGraph h;
  h.mode = DerivationMode::kOracleExact;
  h.vertices = endpoints.endpoints();
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < h.vertices.size(); ++j) {
      if (const RainbowPath* w = endpoints.witness(h.vertices[i], h.vertices[j])) {
        h.edges.push_back({h.vertices[i], h.vertices[j], *w, "oracle"});
      }
    }
  }
  return h;
}

AuxGraph build_aux_graph(const ColoredGraph& g, const RainbowPath& base, const AuxOptions& options) {
  if (options.mode == DerivationMode::kOracleExact) {
    return aux_graph_from_endpoints(SpanningEndpoints::compute(g, base.vertices, options.guard));
  }

  const TerminalAnalysis terminals = terminal_rules(g, compute_profile(g, base), options.rules);
  WitnessGate gate(g, base, options.rules);
  std::map<Vertex, RainbowPath> witness_of;
  std::map<std::pair<Vertex, Vertex>, AuxEdge> edges;
  std::deque<Vertex> queue;
  for (const auto& member : terminals.members) {
    if (!member) continue;
    witness_of.emplace(member->path.front(), member->path);
    queue.push_back(member->path.front());
  }

  auto add_edge = [&](const RainbowPath& path, const std::string& rule) {
    const Vertex a = path.front(), b = path.back();
    const RainbowPath oriented = a < b ? path : path.reversed();
    edges.try_emplace({oriented.front(), oriented.back()},
                      AuxEdge{oriented.front(), oriented.back(), oriented, rule});
    if (witness_of.emplace(b, path.reversed()).second) queue.push_back(b);
  };

  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const RainbowPath witness = witness_of.at(u);
    add_edge(witness, rules::kAuxWitness);
    const PathProfile wp = compute_profile(g, witness);
    for (int j = 0; j <= wp.k - 2; ++j) {
      if (!wp.right.has_fresh_chord(j)) continue;
      std::vector<Vertex> seq;
      append_run(seq, wp, 0, j);
      append_run(seq, wp, wp.k, j + 1);
      add_edge(gate.validate(std::move(seq), rules::kAuxRotation), rules::kAuxRotation);
    }
  }

  AuxGraph h;
  h.mode = DerivationMode::kRuleDerived;
  for (const auto& [v, path] : witness_of) h.vertices.push_back(v);
  for (auto& [key, edge] : edges) h.edges.push_back(std::move(edge));
  return h;
}

}  // namespace rt
