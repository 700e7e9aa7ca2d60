#pragma once

#include <optional>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

// Decomposition Gamma = Omega * K with K the clique of universal vertices.
// A universal vertex lies in no induced 4-cycle, so leaving one inside Omega
// always breaks the coverage clause; the maximal K is the only decomposition
// that can witness the property.
struct CliqueJoinFactor {
  Bitset omega;
  Bitset clique_factor;
};

inline CliqueJoinFactor clique_join_factor(const SimplicialGraph& g) {
  CliqueJoinFactor out{Bitset(g.size()), Bitset(g.size())};
  for (int v = 0; v < g.size(); ++v)
    (g.is_universal(v) ? out.clique_factor : out.omega).set(v);
  return out;
}

struct CfsCertificate {
  Bitset clique_factor;
  Bitset omega;
  std::vector<Square> component;  // the covering component of Omega^4
  // for each omega vertex, an index into `component` of a square containing
  // it; -1 on non-omega vertices
  std::vector<int> coverage;
};

enum class CfsFailure { None, OmegaEmpty, UncoveredVertex, SquareGraphDisconnected };

struct CfsVerdict {
  bool cfs = false;
  bool strongly_cfs = false;
  CfsFailure failure = CfsFailure::None;   // first reason the stronger claim fails
  int uncovered_vertex = -1;               // set for UncoveredVertex
  int component_count = 0;                 // components of Omega^4
  std::optional<CfsCertificate> certificate;
};

// Decides both the squares-coverage condition and its strengthening in one
// pass: omega nonempty, some component T of Omega^4 covers every omega
// vertex; strongly iff additionally Omega^4 is connected.
inline CfsVerdict classify_cfs(const SimplicialGraph& g) {
  CfsVerdict out;
  auto [omega, k] = clique_join_factor(g);
  if (omega.none()) {
    out.failure = CfsFailure::OmegaEmpty;
    return out;
  }

  // Squares of the induced subgraph on omega. Universal vertices lie in no
  // square, so these are exactly the squares of g.
  SquareGraph sg = square_graph(g);
  for (const Square& s : sg.squares)
    for (int v : s.vertices())
      if (!omega.test(v))
        throw std::logic_error("universal vertex inside an induced 4-cycle");

  std::vector<int> comp = sg.component_of();
  out.component_count = 0;
  for (int c : comp) out.component_count = std::max(out.component_count, c + 1);

  // Try each component as the covering T (the condition is existential).
  int best_comp = -1, best_cover = -1;
  int omega_size = omega.count();
  for (int c = 0; c < out.component_count; ++c) {
    Bitset covered(g.size());
    for (int s = 0; s < sg.size(); ++s)
      if (comp[s] == c)
        for (int v : sg.squares[s].vertices()) covered.set(v);
    int ncov = covered.count();
    if (ncov > best_cover) {
      best_cover = ncov;
      best_comp = c;
    }
    if (ncov == omega_size) {
      out.cfs = true;
      CfsCertificate cert;
      cert.clique_factor = k;
      cert.omega = omega;
      cert.coverage.assign(g.size(), -1);
      for (int s = 0; s < sg.size(); ++s)
        if (comp[s] == c) {
          int idx = int(cert.component.size());
          cert.component.push_back(sg.squares[s]);
          for (int v : sg.squares[s].vertices())
            if (cert.coverage[v] == -1) cert.coverage[v] = idx;
        }
      out.certificate = std::move(cert);
      out.strongly_cfs = out.component_count == 1;
      if (!out.strongly_cfs) out.failure = CfsFailure::SquareGraphDisconnected;
      return out;
    }
  }

  // No component covers omega: report the smallest omega vertex the best
  // component misses.
  Bitset covered(g.size());
  if (best_comp >= 0)
    for (int s = 0; s < sg.size(); ++s)
      if (comp[s] == best_comp)
        for (int v : sg.squares[s].vertices()) covered.set(v);
  out.failure = CfsFailure::UncoveredVertex;
  out.uncovered_vertex = omega.and_not(covered).first();
  return out;
}

inline CfsVerdict is_cfs(const SimplicialGraph& g) { return classify_cfs(g); }

inline CfsVerdict is_strongly_cfs(const SimplicialGraph& g) {
  return classify_cfs(g);
}

}  // namespace racg
