#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

// Verdict for strong quasiconvexity of the special subgroup generated by
// delta: true iff every induced 4-cycle with a diagonal inside delta has all
// four vertices inside delta.
struct SqcVerdict {
  bool strongly_quasiconvex = false;
  std::optional<Square> violating_square;
  std::optional<std::pair<int, int>> violating_pair;  // the diagonal in delta
};

inline SqcVerdict is_strongly_quasiconvex_special(
    const SimplicialGraph&, const Bitset& delta,
    const std::vector<Square>& squares) {
  for (const Square& s : squares) {
    bool d1_in = delta.test(s.diag1[0]) && delta.test(s.diag1[1]);
    bool d2_in = delta.test(s.diag2[0]) && delta.test(s.diag2[1]);
    if ((d1_in && !d2_in) || (d2_in && !d1_in)) {
      SqcVerdict out;
      out.violating_square = s;
      out.violating_pair = d1_in ? std::make_pair(s.diag1[0], s.diag1[1])
                                 : std::make_pair(s.diag2[0], s.diag2[1]);
      return out;
    }
  }
  SqcVerdict out;
  out.strongly_quasiconvex = true;
  return out;
}

inline SqcVerdict is_strongly_quasiconvex_special(const SimplicialGraph& g,
                                                  const Bitset& delta) {
  return is_strongly_quasiconvex_special(g, delta, enumerate_squares(g));
}

// Stability = strong quasiconvexity plus hyperbolicity of the subgroup.
// Hyperbolicity of a right-angled Coxeter group is decided by the absence of
// induced 4-cycles in its defining graph (standard theory, external to the
// convexity criterion itself).
inline bool is_stable_special(const SimplicialGraph& g, const Bitset& delta) {
  if (!is_strongly_quasiconvex_special(g, delta).strongly_quasiconvex)
    return false;
  for (const Square& s : enumerate_squares(g)) {
    bool all_in = true;
    for (int v : s.vertices()) all_in = all_in && delta.test(v);
    if (all_in) return false;
  }
  return true;
}

// Finite index iff the complement of delta is a clique all of whose members
// are adjacent to every vertex of delta; the whole group is then the product
// of the special subgroup with a finite one.
inline bool is_finite_index_special(const SimplicialGraph& g,
                                    const Bitset& delta) {
  std::vector<int> rest = g.vertex_set().and_not(delta).to_vector();
  for (size_t i = 0; i < rest.size(); ++i) {
    for (size_t j = i + 1; j < rest.size(); ++j)
      if (!g.adjacent(rest[i], rest[j])) return false;
    bool ok = true;
    delta.for_each([&](int v) { ok = ok && g.adjacent(rest[i], v); });
    if (!ok) return false;
  }
  return true;
}

// Witness for the orthogonal projection dichotomy at pair level: a
// counterexample is a non-adjacent pair inside delta together with a
// non-adjacent pair in its link not fully inside delta.  Pairs suffice: a
// non-join with at least two vertices always contains a non-adjacent pair,
// and the two pairs span an induced 4-cycle.
struct DichotomyWitness {
  bool confirmed = true;
  std::optional<Bitset> lambda;        // non-adjacent pair inside delta
  std::optional<Bitset> lambda_prime;  // non-adjacent pair in link(lambda), not inside delta
};

inline DichotomyWitness orthogonal_dichotomy_witness(const SimplicialGraph& g,
                                                     const Bitset& delta) {
  std::vector<int> dv = delta.to_vector();
  for (size_t i = 0; i < dv.size(); ++i) {
    for (size_t j = i + 1; j < dv.size(); ++j) {
      int s = dv[i], t = dv[j];
      if (g.adjacent(s, t)) continue;
      Bitset lam = Bitset::of(g.size(), {s, t});
      std::vector<int> lk = link(g, lam).to_vector();
      for (size_t a = 0; a < lk.size(); ++a)
        for (size_t b = a + 1; b < lk.size(); ++b) {
          if (g.adjacent(lk[a], lk[b])) continue;
          if (delta.test(lk[a]) && delta.test(lk[b])) continue;
          DichotomyWitness out;
          out.confirmed = false;
          out.lambda = lam;
          out.lambda_prime = Bitset::of(g.size(), {lk[a], lk[b]});
          return out;
        }
    }
  }
  return DichotomyWitness{};
}

// Smallest superset of delta closed under completing induced 4-cycles whose
// diagonal it contains.
inline Bitset square_closure(const SimplicialGraph& g, Bitset delta) {
  auto squares = enumerate_squares(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Square& s : squares) {
      bool d1_in = delta.test(s.diag1[0]) && delta.test(s.diag1[1]);
      bool d2_in = delta.test(s.diag2[0]) && delta.test(s.diag2[1]);
      if (d1_in || d2_in)
        for (int v : s.vertices())
          if (!delta.test(v)) {
            delta.set(v);
            grew = true;
          }
    }
  }
  return delta;
}

}  // namespace racg
