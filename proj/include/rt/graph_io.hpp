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

#ifndef RT_GRAPH_IO_HPP_
#define RT_GRAPH_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rt/colored_graph.hpp"

namespace rt {

// Text edge-list format:
//
//   n m C
//   u v c      (m lines, 0 <= u < v < n, 0 <= c < C)
//
// Blank lines are ignored and '#' starts a comment that runs to end of line.
// Throws ParseError on malformed input and GraphError on a well-formed file
// that describes an invalid graph.
ColoredGraph parse_graph_text(std::string_view text);
std::string to_graph_text(const ColoredGraph& g);

// {"n", "m", "C", "edges": [[u, v, c], ...], "sides"?: [0|1, ...]}
nlohmann::json to_graph_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const nlohmann::json& j);

// Dispatches on extension: ".json" uses the JSON mirror, anything else the
// text format.
ColoredGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const ColoredGraph& g);

}  // namespace rt

#endif  // RT_GRAPH_IO_HPP_
