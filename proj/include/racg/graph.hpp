#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "racg/bitset.hpp"

namespace racg {

// Finite simple graph with string vertex labels. The vertex order is fixed at
// construction and is the total order used everywhere downstream (canonical
// square form, shortlex, deterministic output).
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  explicit SimplicialGraph(const std::vector<std::string>& labels) {
    for (const auto& l : labels) add_vertex(l);
  }

  int add_vertex(const std::string& label) {
    if (index_.count(label))
      throw std::invalid_argument("duplicate vertex label: " + label);
    int id = int(labels_.size());
    labels_.push_back(label);
    index_[label] = id;
    for (auto& row : adj_) grow(row);
    adj_.emplace_back(id + 1);
    return id;
  }

  void add_edge(int u, int v) {
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + labels_.at(u));
    adj_.at(u).set(v);
    adj_.at(v).set(u);
  }

  void add_edge(const std::string& u, const std::string& v) {
    add_edge(index_of(u), index_of(v));
  }

  int size() const { return int(labels_.size()); }

  bool adjacent(int u, int v) const { return u != v && adj_.at(u).test(v); }

  const Bitset& neighbors(int v) const { return adj_.at(v); }

  const std::string& label(int v) const { return labels_.at(v); }

  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw std::invalid_argument("unknown vertex: " + label);
    return it->second;
  }

  std::optional<int> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }

  Bitset vertex_set() const {
    Bitset b(size());
    for (int i = 0; i < size(); ++i) b.set(i);
    return b;
  }

  Bitset empty_set() const { return Bitset(size()); }

  Bitset subset(const std::vector<std::string>& labels) const {
    Bitset b(size());
    for (const auto& l : labels) b.set(index_of(l));
    return b;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < size(); ++u)
      adj_[u].for_each([&](int v) {
        if (u < v) e.emplace_back(u, v);
      });
    return e;
  }

  // adjacent to every other vertex
  bool is_universal(int v) const { return adj_.at(v).count() == size() - 1; }

 private:
  void grow(Bitset& b) {
    Bitset nb(int(labels_.size()));
    b.for_each([&](int i) { nb.set(i); });
    b = nb;
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bitset> adj_;
};

// Subset of the vertices of a fixed parent graph. Induced-subgraph views only
// ever consult the parent's adjacency.
struct VertexSubset {
  const SimplicialGraph* graph = nullptr;
  Bitset members;

  VertexSubset() = default;
  VertexSubset(const SimplicialGraph& g, Bitset m) : graph(&g), members(std::move(m)) {
    if (members.universe_size() != g.size())
      throw std::invalid_argument("subset universe does not match graph");
  }
  VertexSubset(const SimplicialGraph& g, const std::vector<std::string>& labels)
      : graph(&g), members(g.subset(labels)) {}

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    members.for_each([&](int v) { out.push_back(graph->label(v)); });
    return out;
  }
};

// Canonical induced 4-cycle: two non-adjacent diagonals, each sorted, the
// pair sorted. Equality of squares is equality of canonical forms.
struct Square {
  std::array<int, 2> diag1{-1, -1};
  std::array<int, 2> diag2{-1, -1};

  Square() = default;
  // a,b one diagonal; c,d the other (any order)
  Square(int a, int b, int c, int d) {
    diag1 = {std::min(a, b), std::max(a, b)};
    diag2 = {std::min(c, d), std::max(c, d)};
    if (diag2 < diag1) std::swap(diag1, diag2);
  }

  std::array<int, 4> vertices() const {
    return {diag1[0], diag1[1], diag2[0], diag2[1]};
  }

  bool contains(int v) const {
    return diag1[0] == v || diag1[1] == v || diag2[0] == v || diag2[1] == v;
  }

  bool has_diagonal(int a, int b) const {
    if (a > b) std::swap(a, b);
    return (diag1[0] == a && diag1[1] == b) || (diag2[0] == a && diag2[1] == b);
  }

  bool shares_diagonal(const Square& o) const {
    return diag1 == o.diag1 || diag1 == o.diag2 || diag2 == o.diag1 ||
           diag2 == o.diag2;
  }

  bool operator==(const Square& o) const {
    return diag1 == o.diag1 && diag2 == o.diag2;
  }
  bool operator!=(const Square& o) const { return !(*this == o); }
  bool operator<(const Square& o) const {
    return diag1 != o.diag1 ? diag1 < o.diag1 : diag2 < o.diag2;
  }
};

// Vertices of the square graph are induced 4-cycles; edges join squares that
// share a diagonal.
struct SquareGraph {
  std::vector<Square> squares;               // sorted canonically
  std::vector<std::vector<int>> adj;         // by index into squares

  int size() const { return int(squares.size()); }

  std::vector<int> component_of() const {
    std::vector<int> comp(squares.size(), -1);
    int c = 0;
    for (int s = 0; s < int(squares.size()); ++s) {
      if (comp[s] != -1) continue;
      std::queue<int> q;
      q.push(s);
      comp[s] = c;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
          if (comp[v] == -1) {
            comp[v] = c;
            q.push(v);
          }
      }
      ++c;
    }
    return comp;
  }

  int component_count() const {
    auto comp = component_of();
    int c = 0;
    for (int x : comp) c = std::max(c, x + 1);
    return c;
  }
};

// link(S): vertices outside S adjacent to every member of S.
inline Bitset link(const SimplicialGraph& g, const Bitset& members) {
  if (members.none())
    throw std::invalid_argument("link of empty set undefined");
  Bitset acc = g.vertex_set();
  members.for_each([&](int v) { acc = acc & g.neighbors(v); });
  return acc.and_not(members);
}

inline VertexSubset link(const SimplicialGraph& g, const VertexSubset& s) {
  return VertexSubset(g, link(g, s.members));
}

// star(S) = link(S) together with S itself.
inline Bitset star(const SimplicialGraph& g, const Bitset& members) {
  return link(g, members) | members;
}

inline VertexSubset star(const SimplicialGraph& g, const VertexSubset& s) {
  return VertexSubset(g, star(g, s.members));
}

struct JoinVerdict {
  bool join = false;
  Bitset part_a, part_b;  // nontrivial partition with all cross edges, if join
};

// S splits as a join iff the complement of the induced subgraph on S is
// disconnected; one complement component and its remainder give the parts.
inline JoinVerdict is_join(const SimplicialGraph& g, const Bitset& members) {
  if (members.none())
    throw std::invalid_argument("join decomposition of empty set undefined");
  JoinVerdict out;
  std::vector<int> verts = members.to_vector();
  if (verts.size() < 2) return out;  // a single vertex is not a join

  int n = int(verts.size());
  std::vector<int> comp(n, -1);
  std::queue<int> q;
  comp[0] = 0;
  q.push(0);
  int seen = 1;
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j)
      if (comp[j] == -1 && !g.adjacent(verts[i], verts[j])) {
        comp[j] = 0;
        ++seen;
        q.push(j);
      }
  }
  if (seen == n) return out;  // complement connected: not a join
  out.join = true;
  out.part_a = Bitset(g.size());
  out.part_b = Bitset(g.size());
  for (int j = 0; j < n; ++j)
    (comp[j] == 0 ? out.part_a : out.part_b).set(verts[j]);
  return out;
}

inline JoinVerdict is_join(const SimplicialGraph& g, const VertexSubset& s) {
  return is_join(g, s.members);
}

// All induced 4-cycles: for each non-adjacent pair {u,w}, every non-adjacent
// pair inside link({u,w}) closes a square. Each square is found once per
// diagonal; results are deduplicated through the canonical form.
inline std::vector<Square> enumerate_squares(const SimplicialGraph& g) {
  std::vector<Square> out;
  int n = g.size();
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      if (g.adjacent(u, w)) continue;
      Bitset common = (g.neighbors(u) & g.neighbors(w));
      std::vector<int> cs = common.to_vector();
      for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
          if (!g.adjacent(cs[i], cs[j])) out.emplace_back(u, w, cs[i], cs[j]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline SquareGraph square_graph(const SimplicialGraph& g) {
  SquareGraph sg;
  sg.squares = enumerate_squares(g);
  sg.adj.assign(sg.squares.size(), {});
  for (int i = 0; i < int(sg.squares.size()); ++i)
    for (int j = i + 1; j < int(sg.squares.size()); ++j)
      if (sg.squares[i].shares_diagonal(sg.squares[j])) {
        sg.adj[i].push_back(j);
        sg.adj[j].push_back(i);
      }
  return sg;
}

// BFS graph distance; nullopt when u,v lie in different components.
inline std::optional<int> distance(const SimplicialGraph& g, int u, int v) {
  if (u < 0 || u >= g.size() || v < 0 || v >= g.size())
    throw std::invalid_argument("distance: vertex out of range");
  if (u == v) return 0;
  std::vector<int> d(g.size(), -1);
  d[u] = 0;
  std::queue<int> q;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    bool done = false;
    g.neighbors(x).for_each([&](int y) {
      if (d[y] == -1) {
        d[y] = d[x] + 1;
        if (y == v) done = true;
        q.push(y);
      }
    });
    if (done) return d[v];
  }
  return std::nullopt;
}

inline std::optional<int> distance(const SimplicialGraph& g,
                                   const std::string& u,
                                   const std::string& v) {
  return distance(g, g.index_of(u), g.index_of(v));
}

}  // namespace racg
