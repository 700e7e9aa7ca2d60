#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "racg/cfs.hpp"
#include "racg/graph.hpp"

namespace racg {

// Graph JSON: {"vertices": ["a","b",...], "edges": [["a","b"],...]}
// Loops, duplicate edges and unknown endpoints are rejected; errors carry the
// offending entry. Syntax errors report the line computed from the parser's
// byte offset.
inline SimplicialGraph graph_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1;
    for (size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw std::invalid_argument("graph json: parse error at line " +
                                std::to_string(line) + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("graph json: expected object with \"vertices\" array");
  SimplicialGraph g;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string())
      throw std::invalid_argument("graph json: vertex labels must be strings");
    g.add_vertex(v.get<std::string>());
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw std::invalid_argument("graph json: \"edges\" must be an array");
    size_t k = 0;
    for (const auto& e : j["edges"]) {
      std::string where = "graph json: edges[" + std::to_string(k) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw std::invalid_argument(where + ": expected a pair of labels");
      std::string a = e[0].get<std::string>(), b = e[1].get<std::string>();
      if (!g.has_vertex(a))
        throw std::invalid_argument(where + ": unknown endpoint \"" + a + "\"");
      if (!g.has_vertex(b))
        throw std::invalid_argument(where + ": unknown endpoint \"" + b + "\"");
      if (a == b)
        throw std::invalid_argument(where + ": self-loop at \"" + a + "\"");
      if (g.adjacent(g.index_of(a), g.index_of(b)))
        throw std::invalid_argument(where + ": duplicate edge [\"" + a + "\",\"" + b + "\"]");
      g.add_edge(a, b);
      ++k;
    }
  }
  return g;
}

inline nlohmann::ordered_json graph_to_json(const SimplicialGraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.size(); ++v) j["vertices"].push_back(g.label(v));
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges())
    j["edges"].push_back({g.label(u), g.label(v)});
  return j;
}

inline std::string graph_to_dot(const SimplicialGraph& g,
                                const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.size(); ++v) os << "  \"" << g.label(v) << "\";\n";
  for (auto [u, v] : g.edges())
    os << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
  os << "}\n";
  return os.str();
}

inline std::string square_label(const SimplicialGraph& g, const Square& s) {
  return "{" + g.label(s.diag1[0]) + "," + g.label(s.diag1[1]) + "}|{" +
         g.label(s.diag2[0]) + "," + g.label(s.diag2[1]) + "}";
}

// DOT of the square graph; square vertices are labeled by their diagonals.
// An optional set of square indices is drawn highlighted.
inline std::string square_graph_to_dot(const SimplicialGraph& g,
                                       const SquareGraph& sg,
                                       const std::vector<int>& highlight = {}) {
  std::vector<char> hot(sg.squares.size(), 0);
  for (int i : highlight) hot.at(i) = 1;
  std::ostringstream os;
  os << "graph squares {\n";
  for (int i = 0; i < sg.size(); ++i) {
    os << "  s" << i << " [label=\"" << square_label(g, sg.squares[i]) << "\"";
    if (hot[i]) os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (int i = 0; i < sg.size(); ++i)
    for (int j : sg.adj[i])
      if (i < j) os << "  s" << i << " -- s" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace racg
