#pragma once

// Shared brute-force oracles for the graph-level test suites. Everything here
// is deliberately independent of the library algorithms it cross-checks:
// subsets are enumerated directly and conditions evaluated from first
// principles.

#include <random>
#include <vector>

#include "racg/fixtures.hpp"
#include "racg/graph.hpp"

namespace testsupport {

inline racg::SimplicialGraph random_graph(int n, double p, std::mt19937& rng) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  racg::SimplicialGraph g(names);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// every 4-subset, tested directly for inducing a 4-cycle
inline std::vector<racg::Square> squares_brute(const racg::SimplicialGraph& g) {
  std::vector<racg::Square> out;
  int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int vs[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(vs[i], vs[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges != 4 || deg[0] != 2 || deg[1] != 2 || deg[2] != 2 ||
              deg[3] != 2)
            continue;
          // the two non-neighbors of a are its diagonal partner and one other
          int partner = -1;
          for (int i = 1; i < 4; ++i)
            if (!g.adjacent(vs[0], vs[i])) partner = vs[i];
          int o1 = -1, o2 = -1;
          for (int i = 1; i < 4; ++i)
            if (vs[i] != partner) (o1 == -1 ? o1 : o2) = vs[i];
          out.emplace_back(vs[0], partner, o1, o2);
        }
  std::sort(out.begin(), out.end());
  return out;
}

// join decision by exhaustive bipartition search
inline bool is_join_brute(const racg::SimplicialGraph& g,
                          const racg::Bitset& members) {
  std::vector<int> vs = members.to_vector();
  int k = int(vs.size());
  if (k < 2) return false;
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j)
        if (((mask >> i) & 1) && !((mask >> j) & 1))
          if (!g.adjacent(vs[i], vs[j])) ok = false;
    if (ok) return true;
  }
  return false;
}

inline racg::Bitset subset_from_mask(const racg::SimplicialGraph& g,
                                     unsigned mask) {
  racg::Bitset b(g.size());
  for (int v = 0; v < g.size(); ++v)
    if ((mask >> v) & 1) b.set(v);
  return b;
}

}  // namespace testsupport
