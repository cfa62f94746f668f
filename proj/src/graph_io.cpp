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

#include "rt/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "rt/errors.hpp"

namespace rt {
namespace {

// Splits the data part of each line (comments stripped) into integer rows.
std::vector<std::pair<int, std::vector<long long>>> tokenize(std::string_view text) {
  std::vector<std::pair<int, std::vector<long long>>> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<long long> values;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      long long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
      if (ec != std::errc() || ptr != line.data() + j) {
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                         std::string(line.substr(i, j - i)) + "'");
      }
      values.push_back(value);
      i = j;
    }
    if (!values.empty()) rows.emplace_back(line_no, std::move(values));
    if (end == text.size()) break;
  }
  return rows;
}

}  // namespace

ColoredGraph parse_graph_text(std::string_view text) {
  auto rows = tokenize(text);
  if (rows.empty()) throw ParseError("missing header line 'n m C'");
  const auto& [header_line, header] = rows.front();
  if (header.size() != 3) throw ParseError("header must be 'n m C'");
  const long long n = header[0], m = header[1], palette = header[2];
  if (n < 0 || m < 0 || palette < 0) throw ParseError("header values must be non-negative");
  if (static_cast<long long>(rows.size()) - 1 != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(rows.size() - 1));
  }
  std::vector<ColoredEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [line_no, row] = rows[r];
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (row.size() != 3) throw ParseError(where + "edge lines must be 'u v c'");
    if (!(0 <= row[0] && row[0] < row[1] && row[1] < n)) {
      throw ParseError(where + "endpoints must satisfy 0 <= u < v < n");
    }
    if (!(0 <= row[2] && row[2] < palette)) throw ParseError(where + "color must satisfy 0 <= c < C");
    edges.push_back({static_cast<Vertex>(row[0]), static_cast<Vertex>(row[1]),
                     static_cast<Color>(row[2])});
  }
  ColoredGraph g = ColoredGraph::create(static_cast<int>(n), std::move(edges));
  if (g.color_count() != palette) {
    throw ParseError("header announces " + std::to_string(palette) + " colors, " +
                     std::to_string(g.color_count()) + " are used");
  }
  return g;
}

std::string to_graph_text(const ColoredGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.color_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.color << '\n';
  return out.str();
}

nlohmann::json to_graph_json(const ColoredGraph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["C"] = g.color_count();
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.color});
  j["edges"] = std::move(edges);
  if (g.sides()) {
    auto sides = nlohmann::json::array();
    for (Side s : *g.sides()) sides.push_back(static_cast<int>(s));
    j["sides"] = std::move(sides);
  }
  return j;
}

ColoredGraph graph_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<ColoredEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("edges must be [u, v, c] triples");
      edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    if (j.contains("m") && j["m"].get<int>() != static_cast<int>(edges.size())) {
      throw ParseError("'m' does not match the number of edges");
    }
    std::optional<std::vector<Side>> sides;
    if (j.contains("sides")) {
      sides.emplace();
      for (const auto& s : j["sides"]) {
        const int tag = s.get<int>();
        if (tag != 0 && tag != 1) throw ParseError("side tags must be 0 or 1");
        sides->push_back(static_cast<Side>(tag));
      }
    }
    ColoredGraph g = ColoredGraph::create(n, std::move(edges), std::move(sides));
    if (j.contains("C") && j["C"].get<int>() != g.color_count()) {
      throw ParseError("'C' does not match the colors in use");
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what());
  }
}

ColoredGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (path.extension() == ".json") {
    try {
      return graph_from_json(nlohmann::json::parse(buffer.str()));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(path.string() + ": " + e.what());
    }
  }
  return parse_graph_text(buffer.str());
}

void write_graph_file(const std::filesystem::path& path, const ColoredGraph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  if (path.extension() == ".json") {
    out << to_graph_json(g).dump(2) << '\n';
  } else {
    out << to_graph_text(g);
  }
}

}  // namespace rt
