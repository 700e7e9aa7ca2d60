#pragma once

#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "racg/cfs.hpp"
#include "racg/graph.hpp"

namespace racg {

// A domain stands for the index of the special subgroup generated by a
// nonempty induced subgraph, taken at the identity coset. Relations among
// translated copies reduce to these by the group action, so no coset data is
// stored.
struct Domain {
  const SimplicialGraph* graph = nullptr;
  Bitset lambda;

  Domain(const SimplicialGraph& g, Bitset l) : graph(&g), lambda(std::move(l)) {
    if (lambda.none()) throw std::invalid_argument("domain subgraph must be nonempty");
  }
  Domain(const SimplicialGraph& g, const std::vector<std::string>& labels)
      : Domain(g, g.subset(labels)) {}
};

enum class Relation { Equal, Nested, Orthogonal, Transverse };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "equal";
    case Relation::Nested: return "nested";
    case Relation::Orthogonal: return "orthogonal";
    default: return "transverse";
  }
}

// Nesting is subgraph containment; orthogonality is containment in the link
// (symmetric, and disjoint from nesting since the link excludes the set).
inline Relation relation(const Domain& d1, const Domain& d2) {
  if (d1.graph != d2.graph)
    throw std::invalid_argument("relation: domains over different graphs");
  if (d1.lambda == d2.lambda) return Relation::Equal;
  if (d1.lambda.subset_of(d2.lambda) || d2.lambda.subset_of(d1.lambda))
    return Relation::Nested;
  if (d1.lambda.subset_of(link(*d1.graph, d2.lambda)))
    return Relation::Orthogonal;
  return Relation::Transverse;
}

// The associated space has infinite diameter iff the subgroup is infinite
// (lambda is not a clique) and lambda does not split as a join.
inline bool is_unbounded(const Domain& d) {
  std::vector<int> vs = d.lambda.to_vector();
  bool clique = true;
  for (size_t i = 0; i < vs.size() && clique; ++i)
    for (size_t j = i + 1; j < vs.size() && clique; ++j)
      if (!d.graph->adjacent(vs[i], vs[j])) clique = false;
  if (clique) return false;
  return !is_join(*d.graph, d.lambda).join;
}

// Membership in the set of domains admitting an unbounded orthogonal
// partner: lambda has at least two vertices, is not a join, and its link
// contains a non-adjacent pair (the minimal partner).
inline bool in_s_star(const Domain& d) {
  if (d.lambda.count() < 2) return false;
  if (is_join(*d.graph, d.lambda).join) return false;
  std::vector<int> lk = link(*d.graph, d.lambda).to_vector();
  for (size_t i = 0; i < lk.size(); ++i)
    for (size_t j = i + 1; j < lk.size(); ++j)
      if (!d.graph->adjacent(lk[i], lk[j])) return true;
  return false;
}

// Atoms are the diagonals of squares; two atoms are adjacent when together
// they span an induced 4-cycle.
struct AtomGraph {
  std::vector<std::pair<int, int>> atoms;  // sorted pairs, sorted list
  std::vector<std::vector<int>> adj;

  int size() const { return int(atoms.size()); }

  int component_count() const {
    std::vector<int> comp(atoms.size(), -1);
    int c = 0;
    for (int s = 0; s < int(atoms.size()); ++s) {
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
    return c;
  }
};

inline AtomGraph atom_graph(const SimplicialGraph& g) {
  AtomGraph out;
  auto squares = enumerate_squares(g);
  for (const Square& s : squares) {
    out.atoms.emplace_back(s.diag1[0], s.diag1[1]);
    out.atoms.emplace_back(s.diag2[0], s.diag2[1]);
  }
  std::sort(out.atoms.begin(), out.atoms.end());
  out.atoms.erase(std::unique(out.atoms.begin(), out.atoms.end()),
                  out.atoms.end());
  out.adj.assign(out.atoms.size(), {});
  auto spans_square = [&](std::pair<int, int> p, std::pair<int, int> q) {
    return g.adjacent(p.first, q.first) && g.adjacent(p.first, q.second) &&
           g.adjacent(p.second, q.first) && g.adjacent(p.second, q.second);
  };
  for (int i = 0; i < out.size(); ++i)
    for (int j = i + 1; j < out.size(); ++j)
      if (spans_square(out.atoms[i], out.atoms[j])) {
        out.adj[i].push_back(j);
        out.adj[j].push_back(i);
      }
  return out;
}

enum class Hypothesis { Applies, FailsCover, FailsConnectivity };

struct HypothesisVerdict {
  Hypothesis kind = Hypothesis::Applies;
  int uncovered_vertex = -1;    // FailsCover
  int atom_components = 0;      // FailsConnectivity
};

// Graph-level hypotheses for strongly quasiconvex subsets to be hyperbolic or
// coarsely covering: after removing the clique factor, every remaining vertex
// lies in an induced 4-cycle and the atom graph is connected (this is the
// pair-sequence connectivity argument).
inline HypothesisVerdict coverage_connectivity_check(const SimplicialGraph& g) {
  HypothesisVerdict out;
  auto [omega, k] = clique_join_factor(g);
  auto squares = enumerate_squares(g);
  Bitset covered(g.size());
  for (const Square& s : squares)
    for (int v : s.vertices()) covered.set(v);
  Bitset missing = omega.and_not(covered);
  if (omega.none() || missing.any()) {
    out.kind = Hypothesis::FailsCover;
    out.uncovered_vertex = omega.none() ? -1 : missing.first();
    return out;
  }
  AtomGraph ag = atom_graph(g);
  out.atom_components = ag.component_count();
  if (out.atom_components > 1) {
    out.kind = Hypothesis::FailsConnectivity;
    return out;
  }
  return out;
}

}  // namespace racg
