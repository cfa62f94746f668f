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

#include "rt/claims.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "rt/errors.hpp"

namespace rt {

namespace claims {
const std::vector<std::string>& unconditional() {
  static const std::vector<std::string> ids = {
      kOutsideMissesFreed,  kOutsideCount,          kNiceSumCore,        kClosingJumpAll,
      kFreshChordTerminal,  kNiceChordTerminal,     kTwoSidedTerminal,   kLowIndexNice,
      kLowIndexFresh,       kOuterRange,            kMiddleRange,        kTerminalCountCore,
      kSplitPivots,         kAuxWitnessDegree,      kMatchingMinDegree,  kMatchedInducedEdges,
      kMatchedPairDegree,   kMatchingIncidentEdges, kProfileIdentities,  kRuleTerminalsSubset,
      kRuleAuxSubset};
  return ids;
}
}  // namespace claims

InstanceAnalysis analyze_instance(const ColoredGraph& g, const RainbowPath& base,
                                  const AnalysisOptions& options) {
  if (!validate_proper(g).is_proper) throw PreconditionError("edge coloring is not proper");
  InstanceAnalysis a;
  a.base = base;
  a.profile = compute_profile(g, base);
  const int k = a.profile.k;

  InstanceFacts& f = a.facts;
  f.k = k;
  f.longest = has_rainbow_path(g, k + 1, options.budget).answer == Existence::kNo;
  f.min_degree = g.min_degree();
  f.degree_hypothesis = Rational(f.min_degree) >= degree_threshold(k);
  f.closing_edge_fresh = a.profile.closing_edge_fresh();
  f.pivots_present = a.profile.pivots_present();
  f.pivots_ordered = f.pivots_present && *a.profile.lower_pivot <= *a.profile.upper_pivot;

  a.rule_terminals = terminal_rules(g, a.profile, options.rules);
  AuxOptions aux_options;
  aux_options.mode = DerivationMode::kRuleDerived;
  aux_options.rules = options.rules;
  a.rule_aux = build_aux_graph(g, base, aux_options);

  std::optional<SpanningEndpoints> endpoints;
  try {
    endpoints = SpanningEndpoints::compute(g, base.vertices, options.guard);
  } catch (const GuardError&) {
  }
  if (endpoints) {
    a.oracle_terminals = terminal_oracle(base, *endpoints);
    a.oracle_aux = aux_graph_from_endpoints(*endpoints);
    a.matching = find_matching(g, base, *a.oracle_aux);
    f.oracle_available = true;
  }
  return a;
}

const ClaimRecord* ClaimReport::find(const std::string& id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool ClaimReport::all_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimRecord& c) {
    return !c.hypotheses_met || c.conclusion_holds.value_or(true);
  });
}

namespace {

class Checker {
 public:
  Checker(const ColoredGraph& g, const InstanceAnalysis& a) : g_(g), a_(a), p_(a.profile), k_(a.profile.k) {}

  ClaimReport run() {
    report_.base = a_.base;
    report_.facts = a_.facts;
    const InstanceFacts& f = a_.facts;
    const bool oracle = f.oracle_available;

    // Inequalities are handed over as (lhs, rhs) pairs, slack lhs - rhs.
    check(claims::kOutsideMissesFreed, f.longest, [&] {
      return disjoint(p_.left.outside, p_.right.freed) && disjoint(p_.right.outside, p_.left.freed);
    });
    check_all(claims::kOutsideCount, f.longest, [&] {
      return std::vector<Ineq>{{Rational(k_ - sz(p_.right.fresh)), Rational(sz(p_.left.outside))},
                               {Rational(k_ - sz(p_.left.fresh)), Rational(sz(p_.right.outside))}};
    });
    const bool degree = f.longest && f.degree_hypothesis;
    check_all(claims::kFreshLeft, degree,
              [&] { return std::vector<Ineq>{{Rational(sz(p_.left.fresh)), rat(2 * k_, 7) + 2}}; });
    check_all(claims::kFreshRight, degree,
              [&] { return std::vector<Ineq>{{Rational(sz(p_.right.fresh)), rat(2 * k_, 7) + 2}}; });
    const Rational nice_sum(sz(p_.left.nice) + sz(p_.right.nice));
    check_all(claims::kNiceSum, degree,
              [&] { return std::vector<Ineq>{{nice_sum, rat(4 * k_, 7) + 4}}; });
    check_all(claims::kNiceSumCore, f.longest, [&] {
      return std::vector<Ineq>{
          {nice_sum, Rational(sz(p_.left.all) + sz(p_.right.all) - 2 * k_)}};
    });

    const TerminalAnalysis* t = oracle ? &*a_.oracle_terminals : nullptr;
    const auto terminal = [&](int i) { return t->contains_index(i); };
    check_all(claims::kTerminalCount, degree && oracle, [&] {
      return std::vector<Ineq>{{Rational(t->size()), rat(3 * k_, 7) + rat(3, 2)}};
    });
    check(claims::kClosingJumpAll, oracle && f.closing_edge_fresh,
          [&] { return t->size() == k_ + 1; });

    check(claims::kFreshChordTerminal, oracle, [&] {
      for (int i = 0; i <= k_; ++i) {
        if (p_.left.has_fresh_chord(i) && !terminal(i - 1)) return fail("left chord at " + idx(i));
        if (p_.right.has_fresh_chord(i) && !terminal(i + 1)) return fail("right chord at " + idx(i));
      }
      return true;
    });
    check(claims::kNiceChordTerminal, oracle && !f.closing_edge_fresh, [&] { return nice_chords(*t); });
    check(claims::kTwoSidedTerminal, oracle && f.pivots_ordered, [&] {
      for (int i = *p_.lower_pivot; i <= *p_.upper_pivot; ++i) {
        if ((p_.left.has_fresh_chord(i) || p_.right.has_fresh_chord(i)) &&
            !(terminal(i - 1) && terminal(i + 1))) {
          return fail("index " + idx(i));
        }
      }
      return true;
    });
    check(claims::kLowIndexNice, !f.closing_edge_fresh, [&] {
      for (int z = 0; z <= k_; ++z) {
        if (p_.left_nice_in(0, z) != p_.left_nice_in(2, z)) return fail("left z=" + idx(z));
        if (p_.right_nice_in(z, k_) != p_.right_nice_in(z, k_ - 2)) return fail("right z=" + idx(z));
      }
      return true;
    });
    check(claims::kLowIndexFresh, !f.closing_edge_fresh, [&] {
      for (int z = 0; z <= k_; ++z) {
        if (p_.left_fresh_in(0, z) != p_.left_fresh_in(2, z)) return fail("left z=" + idx(z));
        if (p_.right_fresh_in(z, k_) != p_.right_fresh_in(z, k_ - 2)) return fail("right z=" + idx(z));
      }
      return true;
    });

    const bool ordered = f.longest && oracle && f.pivots_ordered && !f.closing_edge_fresh;
    check_all(claims::kOuterRange, ordered, [&] {
      const int a = *p_.lower_pivot, b = *p_.upper_pivot;
      return std::vector<Ineq>{
          {Rational(t->count_in(0, a - 1)),
           rat(1, 2) * (Rational(p_.left_nice_in(0, a) + p_.left_fresh_in(0, a)) +
                        rat(p_.right_nice_in(0, a), 2))},
          {Rational(t->count_in(b + 1, k_)),
           rat(1, 2) * (Rational(p_.right_nice_in(b, k_) + p_.right_fresh_in(b, k_)) +
                        rat(p_.left_nice_in(b, k_), 2))}};
    });
    check_all(claims::kMiddleRange, ordered, [&] {
      const int a = *p_.lower_pivot, b = *p_.upper_pivot;
      const int pairs = p_.left_nice_in(a + 1, b - 1) + p_.right_nice_in(a + 1, b - 1) +
                        2 * (p_.left_fresh_in(a + 1, b) + p_.right_fresh_in(a, b - 1)) - 2;
      return std::vector<Ineq>{{Rational(t->count_in(a, b)), rat(pairs, 4)}};
    });
    check_all(claims::kTerminalCountCore, ordered, [&] {
      const int rhs = sz(p_.left.nice) + sz(p_.right.nice) +
                      2 * (sz(p_.left.fresh) + sz(p_.right.fresh)) - 6;
      return std::vector<Ineq>{{Rational(4 * t->size()), Rational(rhs)}};
    });
    check_all(claims::kSplitPivots, f.longest && oracle && f.pivots_present && !f.pivots_ordered, [&] {
      return std::vector<Ineq>{
          {Rational(t->size()), Rational(sz(p_.left.fresh) + sz(p_.right.fresh))}};
    });

    const AuxGraph* h = oracle ? &*a_.oracle_aux : nullptr;
    const MatchingReport* mr = oracle ? &*a_.matching : nullptr;
    check_all(claims::kAuxMinDegree, degree && oracle, [&] {
      return std::vector<Ineq>{{Rational(h->min_degree()), rat(2 * k_, 7) + 2}};
    });
    check_all(claims::kAuxWitnessDegree, oracle, [&] {
      std::vector<Ineq> out;
      for (const auto& member : t->members) {
        if (!member) continue;
        const PathProfile wp = compute_profile(g_, member->path);
        out.push_back({Rational(h->degree(member->path.front())), Rational(sz(wp.right.fresh))});
      }
      return out;
    });
    check_all(claims::kMatchingMinDegree, oracle, [&] {
      return std::vector<Ineq>{
          {Rational(mr->m), Rational(std::min(mr->aux_min_degree, mr->aux_vertex_count / 2))}};
    });
    check_all(claims::kMatchingSize, degree && oracle, [&] {
      const Rational floor_half(t->size() / 2);
      const Rational guaranteed = std::min(rat(2 * k_, 7) + 2, floor_half);
      return std::vector<Ineq>{{Rational(mr->m), guaranteed}, {guaranteed, rat(3 * k_, 14)}};
    });
    check_all(claims::kMatchedInducedEdges, oracle, [&] {
      Rational rhs(2 * mr->m * mr->m - 2 * mr->m);
      for (const auto& pair : mr->pairs) rhs -= rat(pair.non_edges, 2);
      return std::vector<Ineq>{{Rational(mr->induced_edges), rhs}};
    });
    check_all(claims::kMatchedPairDegree, f.longest && oracle, [&] {
      std::vector<Ineq> out;
      for (const auto& pair : mr->pairs) {
        out.push_back({Rational(3 * k_) - rat(pair.non_edges, 2),
                       Rational(g_.degree(pair.a) + g_.degree(pair.b))});
      }
      return out;
    });
    check_all(claims::kMatchingIncidentEdges, f.longest && oracle, [&] {
      return std::vector<Ineq>{
          {Rational((3 * k_ + 2 - 2 * mr->m) * mr->m), Rational(mr->incident_edges)}};
    });

    check(claims::kProfileIdentities, true, [&] {
      const auto failures = profile_identity_failures(g_, p_, f.longest);
      if (!failures.empty()) return fail(failures.front());
      return true;
    });
    check(claims::kRuleTerminalsSubset, oracle, [&] {
      for (int i = 0; i <= k_; ++i) {
        if (a_.rule_terminals.contains_index(i) && !terminal(i)) return fail("index " + idx(i));
      }
      return true;
    });
    check(claims::kRuleAuxSubset, oracle, [&] {
      for (Vertex v : a_.rule_aux.vertices) {
        if (!std::binary_search(h->vertices.begin(), h->vertices.end(), v)) {
          return fail("vertex " + idx(v));
        }
      }
      for (const auto& e : a_.rule_aux.edges) {
        if (!h->has_edge(e.u, e.v)) return fail("edge " + idx(e.u) + "-" + idx(e.v));
      }
      return true;
    });
    return std::move(report_);
  }

 private:
  struct Ineq {
    Rational lhs;
    Rational rhs;
  };

  static int sz(const ColorList& c) { return static_cast<int>(c.size()); }
  static std::string idx(int i) { return std::to_string(i); }
  static bool disjoint(const ColorList& a, const ColorList& b) {
    return std::none_of(a.begin(), a.end(),
                        [&](Color c) { return std::binary_search(b.begin(), b.end(), c); });
  }

  bool fail(std::string why) {
    detail_ = std::move(why);
    return false;
  }

  void check(const char* id, bool hypotheses, const std::function<bool()>& conclusion) {
    ClaimRecord r;
    r.id = id;
    r.hypotheses_met = hypotheses;
    if (hypotheses) {
      detail_.clear();
      r.conclusion_holds = conclusion();
      r.detail = detail_;
    }
    report_.claims.push_back(std::move(r));
  }

  void check_all(const char* id, bool hypotheses, const std::function<std::vector<Ineq>()>& terms) {
    ClaimRecord r;
    r.id = id;
    r.hypotheses_met = hypotheses;
    if (hypotheses) {
      const auto list = terms();
      bool holds = true;
      std::optional<Rational> slack;
      for (const auto& [lhs, rhs] : list) {
        holds = holds && lhs >= rhs;
        const Rational s = lhs - rhs;
        if (!slack || s < *slack) slack = s;
      }
      r.conclusion_holds = holds;
      r.slack = slack;
    }
    report_.claims.push_back(std::move(r));
  }

  // Nice chords in both orientations; the reversed profile maps index i to
  // k - i.
  bool nice_chords(const TerminalAnalysis& t) {
    const PathProfile reversed = compute_profile(g_, p_.path.reversed());
    for (const PathProfile* q : {&p_, &reversed}) {
      const bool mirrored = q == &reversed;
      auto terminal = [&](int i) { return t.contains_index(mirrored ? k_ - i : i); };
      for (int i = 1; i <= k_ - 1; ++i) {
        if (!q->left.has_nice_chord(i)) continue;
        std::optional<int> pair;
        for (int j = 0; j <= k_ - 2; ++j) {
          if (q->path_color(j + 1) == *q->left.chord[i] && q->right.has_fresh_chord(j)) pair = j;
        }
        const std::string where = std::string(mirrored ? "right" : "left") + " chord at " + idx(i);
        if (!pair || *pair < 1) return fail(where + ": no partner index in [1, k-2]");
        if (!terminal(*pair >= i ? i - 1 : i + 1)) return fail(where);
      }
    }
    return true;
  }

  const ColoredGraph& g_;
  const InstanceAnalysis& a_;
  const PathProfile& p_;
  int k_;
  ClaimReport report_;
  std::string detail_;
};

}  // namespace

ClaimReport check_claims(const ColoredGraph& g, const InstanceAnalysis& analysis) {
  return Checker(g, analysis).run();
}

ClaimReport check_claims(const ColoredGraph& g, const RainbowPath& base,
                         const AnalysisOptions& options) {
  return check_claims(g, analyze_instance(g, base, options));
}

}  // namespace rt
