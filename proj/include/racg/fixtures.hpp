#pragma once

#include <string>
#include <vector>

#include "racg/constructions.hpp"
#include "racg/graph.hpp"

namespace racg {

// Named deterministic graphs used by the command line and the test suites.
struct GraphFixture {
  std::string name;
  std::string note;
  SimplicialGraph graph;
};

inline SimplicialGraph cycle_graph(int n, const std::string& prefix = "") {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    names.push_back(prefix.empty() ? std::string(1, char('a' + i))
                                   : prefix + std::to_string(i + 1));
  SimplicialGraph g(names);
  for (int i = 0; i < n; ++i) g.add_edge(names[i], names[(i + 1) % n]);
  return g;
}

inline SimplicialGraph complete_graph(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  SimplicialGraph g(names);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(names[i], names[j]);
  return g;
}

inline SimplicialGraph path_graph(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  SimplicialGraph g(names);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(names[i], names[i + 1]);
  return g;
}

// no-edge pair: the infinite dihedral group
inline SimplicialGraph dinfty_graph() {
  return SimplicialGraph({"a", "b"});
}

inline SimplicialGraph edge_graph() {
  SimplicialGraph g({"a", "b"});
  g.add_edge("a", "b");
  return g;
}

inline SimplicialGraph cone_over_c4() {
  SimplicialGraph g({"a", "b", "c", "d", "x"});
  g.add_edge("a", "b");
  g.add_edge("b", "c");
  g.add_edge("c", "d");
  g.add_edge("d", "a");
  for (const char* v : {"a", "b", "c", "d"}) g.add_edge(v, "x");
  return g;
}

inline std::vector<std::string> fixture_names() {
  return {"c4",      "c5",       "k5",        "p3",       "edge",
          "dinfty",  "cone-c4",  "ladder3",   "ladder5",  "ladder13",
          "isolated-square-13", "embed-c4",   "embed-c5"};
}

inline GraphFixture make_fixture(const std::string& name) {
  auto starts = [&](const std::string& p) {
    return name.size() > p.size() && name.compare(0, p.size(), p) == 0;
  };
  if (name == "c4") return {name, "4-cycle; its group is a product of two infinite dihedral groups", cycle_graph(4)};
  if (name == "c5") return {name, "5-cycle; square-free", cycle_graph(5)};
  if (name == "edge") return {name, "single edge; finite group", edge_graph()};
  if (name == "dinfty") return {name, "two non-adjacent vertices; infinite dihedral group", dinfty_graph()};
  if (name == "p3") return {name, "path on three vertices", path_graph(3)};
  if (name == "cone-c4") return {name, "4-cycle joined with one universal vertex", cone_over_c4()};
  if (name == "isolated-square-13")
    return {name, "ladder of 13 levels with a glued 4-cycle isolated in the square graph",
            isolated_square_fixture(13, "b1", "a3", "a6", "b9")};
  if (name == "embed-c4")
    return {name, "ambient graph gluing a 4-cycle onto a spaced ladder subset",
            cfs_embed(cycle_graph(4)).omega};
  if (name == "embed-c5")
    return {name, "ambient graph gluing a 5-cycle onto a spaced ladder subset",
            cfs_embed(cycle_graph(5)).omega};
  if (starts("ladder")) {
    int n = std::stoi(name.substr(6));
    return {name, "ladder of " + std::to_string(n) + " levels", ladder_graph(n)};
  }
  if (starts("k")) {
    int n = std::stoi(name.substr(1));
    return {name, "complete graph", complete_graph(n)};
  }
  if (starts("c")) {
    int n = std::stoi(name.substr(1));
    return {name, "cycle", cycle_graph(n)};
  }
  if (starts("p")) {
    int n = std::stoi(name.substr(1));
    return {name, "path", path_graph(n)};
  }
  throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace racg
