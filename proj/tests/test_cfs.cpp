#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

#include "racg/cfs.hpp"
#include "racg/constructions.hpp"
#include "racg/fixtures.hpp"
#include "test_support.hpp"

using namespace racg;
using testsupport::random_graph;

namespace {

// Independent decision of the coverage condition: try every decomposition
// with K a subset of the universal vertices, testing components of the
// square graph of the rest directly.
bool cfs_brute(const SimplicialGraph& g) {
  int n = g.size();
  std::vector<int> universal;
  for (int v = 0; v < n; ++v)
    if (g.is_universal(v)) universal.push_back(v);
  int u = int(universal.size());
  for (unsigned mask = 0; mask < (1u << u); ++mask) {
    Bitset k(g.size());
    for (int i = 0; i < u; ++i)
      if ((mask >> i) & 1) k.set(universal[i]);
    Bitset omega = g.vertex_set().and_not(k);
    if (omega.none()) continue;
    SquareGraph sg = square_graph(g);
    std::vector<Square> inside;
    for (const Square& s : sg.squares) {
      bool ok = true;
      for (int v : s.vertices()) ok = ok && omega.test(v);
      if (ok) inside.push_back(s);
    }
    int m = int(inside.size());
    std::vector<int> comp(m);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (inside[i].shares_diagonal(inside[j])) comp[find(i)] = find(j);
    bool works = false;
    for (int c = 0; c < m && !works; ++c) {
      if (find(c) != c) continue;
      Bitset covered(g.size());
      for (int i = 0; i < m; ++i)
        if (find(i) == c)
          for (int v : inside[i].vertices()) covered.set(v);
      if (omega.subset_of(covered)) works = true;
    }
    if (works) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("clique join factor") {
  SimplicialGraph k5 = complete_graph(5);
  auto f1 = clique_join_factor(k5);
  CHECK(f1.omega.none());
  CHECK(f1.clique_factor.count() == 5);

  SimplicialGraph c4 = cycle_graph(4);
  auto f2 = clique_join_factor(c4);
  CHECK(f2.omega.count() == 4);
  CHECK(f2.clique_factor.none());

  SimplicialGraph cone = cone_over_c4();
  auto f3 = clique_join_factor(cone);
  CHECK(f3.clique_factor == cone.subset({"x"}));
  CHECK(f3.omega.count() == 4);
}

TEST_CASE("classification of fixtures") {
  CfsVerdict lad13 = classify_cfs(ladder_graph(13));
  CHECK(lad13.cfs);
  CHECK(lad13.strongly_cfs);
  REQUIRE(lad13.certificate.has_value());
  CHECK(lad13.certificate->clique_factor.none());
  CHECK(lad13.certificate->omega.count() == 26);

  CfsVerdict c5 = classify_cfs(cycle_graph(5));
  CHECK_FALSE(c5.cfs);
  CHECK(c5.failure == CfsFailure::UncoveredVertex);

  CfsVerdict k5 = classify_cfs(complete_graph(5));
  CHECK_FALSE(k5.cfs);
  CHECK(k5.failure == CfsFailure::OmegaEmpty);

  CfsVerdict c4 = classify_cfs(cycle_graph(4));
  CHECK(c4.cfs);
  CHECK(c4.strongly_cfs);

  CfsVerdict iso = classify_cfs(isolated_square_fixture(13, "b1", "a3", "a6", "b9"));
  CHECK(iso.cfs);
  CHECK_FALSE(iso.strongly_cfs);
  CHECK(iso.failure == CfsFailure::SquareGraphDisconnected);
  CHECK(iso.component_count == 2);
}

TEST_CASE("certificate is coherent") {
  SimplicialGraph g = ladder_graph(6);
  CfsVerdict v = classify_cfs(g);
  REQUIRE(v.certificate.has_value());
  const CfsCertificate& c = *v.certificate;
  c.omega.for_each([&](int vertex) {
    int idx = c.coverage[vertex];
    REQUIRE(idx >= 0);
    CHECK(c.component[idx].contains(vertex));
  });
}

TEST_CASE("strongly cfs implies cfs on random graphs") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + int(rng() % 9);  // 4..12
    SimplicialGraph g = random_graph(n, 0.45 + 0.3 * (rng() % 10) / 10.0, rng);
    CfsVerdict v = classify_cfs(g);
    if (v.strongly_cfs) CHECK(v.cfs);
    if (!v.cfs) CHECK_FALSE(v.strongly_cfs);
  }
}

TEST_CASE("universal vertices never lie in squares") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    SimplicialGraph g = random_graph(3 + int(rng() % 6), 0.7, rng);
    for (const Square& s : enumerate_squares(g))
      for (int v : s.vertices()) CHECK_FALSE(g.is_universal(v));
  }
}

TEST_CASE("classifier agrees with exhaustive decomposition search") {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 250; ++trial) {
    int n = 4 + int(rng() % 5);  // 4..8
    SimplicialGraph g = random_graph(n, 0.4 + 0.4 * (rng() % 10) / 10.0, rng);
    CHECK(classify_cfs(g).cfs == cfs_brute(g));
  }
  CHECK(classify_cfs(cone_over_c4()).cfs == cfs_brute(cone_over_c4()));
}

TEST_CASE("verdict is invariant under vertex relabeling") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + int(rng() % 6);
    SimplicialGraph g = random_graph(n, 0.5, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
    SimplicialGraph h(names);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    CfsVerdict a = classify_cfs(g), b = classify_cfs(h);
    CHECK(a.cfs == b.cfs);
    CHECK(a.strongly_cfs == b.strongly_cfs);
  }
}
