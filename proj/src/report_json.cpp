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

#include "rt/report_json.hpp"

#include "rt/graph_io.hpp"

namespace rt {

using nlohmann::json;

void put_rational(json& out, const std::string& key, const Rational& r) {
  out[key] = to_string(r);
  out[key + "_decimal"] = to_double(r);
}

json to_json(const RainbowPath& p) {
  return {{"length", p.length()}, {"vertices", p.vertices}, {"colors", p.colors}};
}

namespace {

json optional_index(const std::optional<int>& i) { return i ? json(*i) : json(nullptr); }

json end_json(const EndProfile& e) {
  json chords = json::array();
  for (const auto& c : e.chord) chords.push_back(c ? json(*c) : json(nullptr));
  return {{"all", e.all},     {"outside", e.outside}, {"inside", e.inside},
          {"old", e.old},     {"fresh", e.fresh},     {"freed", e.freed},
          {"nice", e.nice},   {"residual", e.residual}, {"chords", chords}};
}

}  // namespace

json to_json(const PathProfile& p) {
  return {{"path", to_json(p.path)},
          {"k", p.k},
          {"left", end_json(p.left)},
          {"right", end_json(p.right)},
          {"lowest", optional_index(p.lowest)},
          {"lower_pivot", optional_index(p.lower_pivot)},
          {"upper_pivot", optional_index(p.upper_pivot)},
          {"highest", optional_index(p.highest)},
          {"closing_edge_fresh", p.closing_edge_fresh()}};
}

json to_json(const TerminalAnalysis& t) {
  json members = json::array();
  for (std::size_t i = 0; i < t.members.size(); ++i) {
    if (!t.members[i]) continue;
    members.push_back({{"index", i},
                       {"vertex", t.base.vertices[i]},
                       {"rule", t.members[i]->rule},
                       {"witness", t.members[i]->path.vertices}});
  }
  return {{"mode", to_string(t.mode)},
          {"base", to_json(t.base)},
          {"size", t.size()},
          {"terminals", t.vertices()},
          {"members", members}};
}

json to_json(const AuxGraph& h) {
  json edges = json::array();
  for (const auto& e : h.edges) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"rule", e.rule}, {"witness", e.witness.vertices}});
  }
  return {{"mode", to_string(h.mode)},
          {"vertices", h.vertices},
          {"edge_count", h.edges.size()},
          {"min_degree", h.min_degree()},
          {"edges", edges}};
}

json to_json(const MatchingReport& m) {
  json pairs = json::array();
  for (const auto& p : m.pairs) pairs.push_back({{"a", p.a}, {"b", p.b}, {"non_edges", p.non_edges}});
  return {{"m", m.m},
          {"pairs", pairs},
          {"aux_min_degree", m.aux_min_degree},
          {"aux_vertex_count", m.aux_vertex_count},
          {"induced_edges", m.induced_edges},
          {"incident_edges", m.incident_edges}};
}

json to_json(const ClaimReport& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    json entry = {{"id", c.id},
                  {"hypotheses_met", c.hypotheses_met},
                  {"conclusion_holds", c.conclusion_holds ? json(*c.conclusion_holds) : json(nullptr)}};
    if (c.slack) put_rational(entry, "slack", *c.slack);
    if (!c.detail.empty()) entry["detail"] = c.detail;
    claims.push_back(entry);
  }
  const InstanceFacts& f = r.facts;
  return {{"base", to_json(r.base)},
          {"facts",
           {{"k", f.k},
            {"longest", f.longest},
            {"min_degree", f.min_degree},
            {"degree_hypothesis", f.degree_hypothesis},
            {"closing_edge_fresh", f.closing_edge_fresh},
            {"pivots_present", f.pivots_present},
            {"pivots_ordered", f.pivots_ordered},
            {"oracle_available", f.oracle_available}}},
          {"claims", claims},
          {"all_hold", r.all_hold()}};
}

json to_json(const InductionCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps) {
    json step = {{"kind", to_string(s.kind)},
                 {"removed_vertices", s.removed_vertices},
                 {"removed_edges", s.removed_edges},
                 {"k", s.k}};
    put_rational(step, "bound_used", s.bound_used);
    if (s.kind == StepKind::kMatching) {
      step["m"] = s.m;
      step["aux_mode"] = to_string(s.aux_mode);
      put_rational(step, "matching_cap", *s.matching_cap);
    }
    steps.push_back(step);
  }
  json out = {{"steps", steps},   {"n", c.n},         {"k", c.k}, {"total_edges", c.total_edges},
              {"holds", c.holds}, {"vacuous", c.vacuous}};
  out["bound_value_rational"] = to_string(c.bound_value);
  out["bound_value_decimal"] = to_double(c.bound_value);
  return out;
}

json to_json(const ExStarResult& r) {
  return {{"n", r.n},
          {"path_length", r.path_length},
          {"value", r.value},
          {"exhaustive", r.exhaustive},
          {"graphs_examined", r.graphs_examined},
          {"coloring_nodes", r.coloring_nodes},
          {"witness", to_graph_text(r.witness)}};
}

json to_json(const ColoringEnumeration& e) {
  json out = {{"path_length", e.path_length},
              {"edges", e.target.edge_count()},
              {"count", e.count},
              {"with_rainbow_path", e.with_rainbow_path},
              {"without_rainbow_path", e.without_rainbow_path},
              {"first_counterexample", nullptr}};
  if (e.first_counterexample) out["first_counterexample"] = to_graph_text(*e.first_counterexample);
  return out;
}

}  // namespace rt
