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

#ifndef RT_REPORT_JSON_HPP_
#define RT_REPORT_JSON_HPP_

#include <json.hpp>

#include "rt/brute_oracle.hpp"
#include "rt/claims.hpp"
#include "rt/induction.hpp"
#include "rt/matching.hpp"
#include "rt/path_profile.hpp"
#include "rt/rainbow_search.hpp"
#include "rt/terminals.hpp"

namespace rt {

// JSON renderings used by the CLI. Rationals appear as "p/q" strings next to
// a "<name>_decimal" approximation.

void put_rational(nlohmann::json& out, const std::string& key, const Rational& r);

nlohmann::json to_json(const RainbowPath& p);
nlohmann::json to_json(const PathProfile& p);
nlohmann::json to_json(const TerminalAnalysis& t);
nlohmann::json to_json(const AuxGraph& h);
nlohmann::json to_json(const MatchingReport& m);
nlohmann::json to_json(const ClaimReport& r);
// {steps: [{kind, removed_vertices, removed_edges, bound_used, ...}], n, k,
//  total_edges, bound_value_rational, holds}
nlohmann::json to_json(const InductionCertificate& c);
nlohmann::json to_json(const ExStarResult& r);
nlohmann::json to_json(const ColoringEnumeration& e);

}  // namespace rt

#endif  // RT_REPORT_JSON_HPP_
