#pragma once

#include <string>
#include <vector>

#include "racg/cfs.hpp"
#include "racg/convexity.hpp"
#include "racg/graph.hpp"

namespace racg {

// Ladder on 2n vertices a1,b1,...,an,bn: full bipartite edges between
// consecutive level pairs, no edge inside a level.
inline SimplicialGraph ladder_graph(int n) {
  if (n < 1) throw std::invalid_argument("ladder size must be at least 1");
  SimplicialGraph g;
  for (int i = 1; i <= n; ++i) {
    g.add_vertex("a" + std::to_string(i));
    g.add_vertex("b" + std::to_string(i));
  }
  for (int i = 2; i <= n; ++i)
    for (const char* x : {"a", "b"})
      for (const char* y : {"a", "b"})
        g.add_edge(std::string(x) + std::to_string(i - 1),
                   std::string(y) + std::to_string(i));
  return g;
}

// a1, a4, ..., a_{3m-2}: distances along the ladder are level differences, so
// these m vertices are pairwise at distance >= 3. Verified against BFS.
inline std::vector<std::string> distance3_set(const SimplicialGraph& ladder,
                                              int m) {
  if (m < 1) throw std::invalid_argument("need at least one vertex");
  int n = ladder.size() / 2;
  int need = 3 * m - 2;
  if (n < need)
    throw std::invalid_argument("ladder too small: need at least " +
                                std::to_string(need) + " levels");
  std::vector<std::string> out;
  for (int k = 0; k < m; ++k) out.push_back("a" + std::to_string(3 * k + 1));
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j) {
      auto d = distance(ladder, out[i], out[j]);
      if (!d || *d < 3)
        throw std::logic_error("selected vertices closer than 3 apart");
    }
  return out;
}

struct Embedding {
  SimplicialGraph source;
  std::vector<int> vertex_map;  // source index -> target index

  Bitset image(const SimplicialGraph& target) const {
    Bitset b(target.size());
    for (int t : vertex_map) b.set(t);
    return b;
  }
};

struct CfsEmbedding {
  SimplicialGraph omega;
  Embedding embedding;
};

// Glue gamma onto a ladder along a pairwise-distance->=3 vertex set, yielding
// an ambient graph that satisfies the squares-coverage condition while the
// image generates a strongly quasiconvex special subgroup of infinite index.
// All three guarantees are re-checked after construction.
inline CfsEmbedding cfs_embed(const SimplicialGraph& gamma) {
  int m = gamma.size();
  if (m == 0) throw std::invalid_argument("cannot embed the empty graph");
  int n = 3 * m - 2;
  SimplicialGraph omega = ladder_graph(std::max(n, 2));
  std::vector<std::string> s = distance3_set(omega, m);

  std::vector<int> vmap(m);
  for (int v = 0; v < m; ++v) vmap[v] = omega.index_of(s[v]);
  for (auto [u, v] : gamma.edges()) omega.add_edge(vmap[u], vmap[v]);

  // induced embedding: adjacency added above, non-adjacency from spacing
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (gamma.adjacent(u, v) != omega.adjacent(vmap[u], vmap[v]))
        throw std::logic_error("embedding is not induced");

  Embedding emb{gamma, vmap};
  Bitset image = emb.image(omega);
  if (!classify_cfs(omega).cfs)
    throw std::logic_error("glued graph lost the squares-coverage property");
  if (!is_strongly_quasiconvex_special(omega, image).strongly_quasiconvex)
    throw std::logic_error("image subgroup is not strongly quasiconvex");
  if (is_finite_index_special(omega, image))
    throw std::logic_error("image subgroup has finite index");
  return CfsEmbedding{std::move(omega), std::move(emb)};
}

// Ladder plus a glued 4-cycle u1-u2-u3-u4 forming one induced square whose
// diagonals {u1,u3},{u2,u4} belong to no other square, so it is an isolated
// vertex of the square graph. Validated by re-enumeration; a shared diagonal
// is reported with the witnessing square.
inline SimplicialGraph isolated_square_fixture(int n, const std::string& u1,
                                               const std::string& u2,
                                               const std::string& u3,
                                               const std::string& u4) {
  SimplicialGraph g = ladder_graph(n);
  std::vector<std::string> us{u1, u2, u3, u4};
  std::vector<int> ui;
  for (const auto& u : us) ui.push_back(g.index_of(u));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.adjacent(ui[i], ui[j]))
        throw std::invalid_argument("vertices must be pairwise non-adjacent: " +
                                    us[i] + " -- " + us[j] + " is a ladder edge");
  for (int i = 0; i < 4; ++i) g.add_edge(ui[i], ui[(i + 1) % 4]);

  if (g.adjacent(ui[0], ui[2]) || g.adjacent(ui[1], ui[3]))
    throw std::invalid_argument("glued cycle has a chord");
  Square target(ui[0], ui[2], ui[1], ui[3]);

  auto squares = enumerate_squares(g);
  bool present = false;
  for (const Square& s : squares) {
    if (s == target) {
      present = true;
      continue;
    }
    if (s.shares_diagonal(target)) {
      std::string msg = "glued square is not isolated: shares a diagonal with {";
      for (int v : s.vertices()) msg += g.label(v) + " ";
      msg += "}";
      throw std::invalid_argument(msg);
    }
  }
  if (!present) throw std::logic_error("glued 4-cycle is not induced");
  return g;
}

}  // namespace racg
