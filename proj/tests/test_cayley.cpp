#include <catch2/catch_amalgamated.hpp>

#include <unordered_map>

#include "racg/cayley.hpp"
#include "racg/constructions.hpp"
#include "racg/fixtures.hpp"
#include "test_support.hpp"

using namespace racg;

namespace {

// Independent oracle: the geometric representation over the integers.
// Generator s acts on the basis by e_u -> e_u - 2 B(u,s) e_s with B(s,s)=1,
// B(u,s)=0 for adjacent (commuting) pairs and -1 otherwise. The
// representation is faithful, so equal matrices mean equal group elements.
struct MatRep {
  const SimplicialGraph* g;
  int n;
  std::vector<std::vector<long long>> gens;  // n x n row major

  explicit MatRep(const SimplicialGraph& graph) : g(&graph), n(graph.size()) {
    for (int s = 0; s < n; ++s) {
      std::vector<long long> m(n * n, 0);
      for (int i = 0; i < n; ++i) m[i * n + i] = 1;
      // column action: e_u -> e_u - 2B(u,s) e_s; as matrix M[s][u] adjusted
      for (int u = 0; u < n; ++u) {
        long long b = (u == s) ? 1 : (graph.adjacent(u, s) ? 0 : -1);
        m[s * n + u] -= 2 * b;
      }
      gens.push_back(std::move(m));
    }
  }

  std::vector<long long> identity() const {
    std::vector<long long> m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
  }

  std::vector<long long> mul(const std::vector<long long>& a,
                             const std::vector<long long>& b) const {
    std::vector<long long> c(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        long long aik = a[i * n + k];
        if (!aik) continue;
        for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
      }
    return c;
  }
};

struct MatHash {
  size_t operator()(const std::vector<long long>& v) const {
    size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= size_t(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// BFS word-metric norms of all elements within the given radius.
std::unordered_map<std::vector<long long>, int, MatHash> oracle_norms(
    const SimplicialGraph& g, int radius) {
  MatRep rep(g);
  std::unordered_map<std::vector<long long>, int, MatHash> depth;
  std::vector<std::vector<long long>> frontier{rep.identity()};
  depth[rep.identity()] = 0;
  for (int d = 1; d <= radius; ++d) {
    std::vector<std::vector<long long>> next;
    for (const auto& m : frontier)
      for (int s = 0; s < g.size(); ++s) {
        auto h = rep.mul(m, rep.gens[s]);
        if (!depth.count(h)) {
          depth[h] = d;
          next.push_back(h);
        }
      }
    frontier = std::move(next);
  }
  return depth;
}

// Walk all words up to `len`, checking the normal form length against the
// oracle norm and shortlex canonicity (one normal form per element).
void check_words_against_oracle(const SimplicialGraph& g, int len) {
  auto norms = oracle_norms(g, len);
  MatRep rep(g);
  std::unordered_map<std::vector<long long>, std::vector<int>, MatHash> canon;

  struct Frame {
    GroupElement e;
    std::vector<long long> m;
    int depth;
  };
  std::vector<Frame> stack{{GroupElement(g), rep.identity(), 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    auto it = norms.find(f.m);
    REQUIRE(it != norms.end());
    REQUIRE(f.e.length() == it->second);
    auto [cit, inserted] = canon.emplace(f.m, f.e.word);
    if (!inserted) REQUIRE(cit->second == f.e.word);
    if (f.depth == len) continue;
    for (int s = 0; s < g.size(); ++s)
      stack.push_back({multiply(f.e, s), rep.mul(f.m, rep.gens[s]), f.depth + 1});
  }
}

}  // namespace

TEST_CASE("multiplication on small groups") {
  SimplicialGraph dinf = dinfty_graph();
  GroupElement aba = normal_form(dinf, std::vector<std::string>{"a", "b", "a"});
  CHECK(multiply(aba, "b").str() == "a b a b");
  CHECK(multiply(aba, "b").length() == 4);

  SimplicialGraph e = edge_graph();
  GroupElement ab = normal_form(e, std::vector<std::string>{"a", "b"});
  CHECK(multiply(ab, "a").str() == "b");

  SimplicialGraph c4 = cycle_graph(4);
  GroupElement ac = normal_form(c4, std::vector<std::string>{"a", "c"});
  CHECK(multiply(ac, "a").str() == "a c a");
  CHECK(multiply(ac, "a").length() == 3);

  CHECK_THROWS_AS(multiply(ac, 17), std::invalid_argument);
  CHECK_THROWS_AS(multiply(ac, std::string("zz")), std::invalid_argument);
}

TEST_CASE("normal forms") {
  SimplicialGraph e = edge_graph();
  CHECK(normal_form(e, std::vector<int>{}).is_identity());
  CHECK(normal_form(e, std::vector<std::string>{"a", "b", "a", "b"}).is_identity());

  SimplicialGraph l2 = ladder_graph(2);
  GroupElement w =
      normal_form(l2, std::vector<std::string>{"a1", "b1", "a1", "b1"});
  CHECK(w.str() == "a1 b1 a1 b1");
  CHECK(w.length() == 4);

  // idempotence
  SimplicialGraph c4 = cycle_graph(4);
  std::mt19937 rng(1212);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> word;
    for (int i = 0; i < 8; ++i) word.push_back(int(rng() % 4));
    GroupElement nf = normal_form(c4, word);
    CHECK(normal_form(c4, nf.word) == nf);
  }
}

TEST_CASE("involution") {
  SimplicialGraph lad = ladder_graph(3);
  std::mt19937 rng(66);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> word;
    int len = int(rng() % 7);
    for (int i = 0; i < len; ++i) word.push_back(int(rng() % lad.size()));
    GroupElement e = normal_form(lad, word);
    int s = int(rng() % lad.size());
    CHECK(multiply(multiply(e, s), s) == e);
    CHECK(std::abs(multiply(e, s).length() - e.length()) == 1);
  }
}

TEST_CASE("balls of small groups") {
  CayleyBall bd(dinfty_graph(), 3);
  CHECK(bd.size() == 7);
  CHECK(bd.sphere_sizes() == std::vector<size_t>{1, 2, 2, 2});

  CayleyBall be(edge_graph(), 2);
  CHECK(be.size() == 4);

  // the edge group is finite: spheres vanish past radius 2
  CayleyBall be5(edge_graph(), 5);
  CHECK(be5.sphere_sizes() == std::vector<size_t>{1, 2, 1, 0, 0, 0});

  CayleyBall bd8(dinfty_graph(), 8);
  for (size_t k = 1; k <= 8; ++k) CHECK(bd8.sphere_sizes()[k] == 2);

  // sphere sizes match the matrix oracle
  SimplicialGraph c4 = cycle_graph(4);
  CayleyBall bc(c4, 4);
  auto norms = oracle_norms(c4, 4);
  std::vector<size_t> oracle_spheres(5, 0);
  for (const auto& [m, d] : norms) ++oracle_spheres[d];
  CHECK(bc.sphere_sizes() == oracle_spheres);
}

TEST_CASE("ball budget") {
  CHECK_THROWS_AS(CayleyBall(ladder_graph(3), 8, 100), BudgetExceeded);
  try {
    CayleyBall(ladder_graph(3), 8, 100);
  } catch (const BudgetExceeded& e) {
    CHECK(e.reached_radius >= 1);
    CHECK(e.elements == 100);
  }
}

TEST_CASE("normal form lengths match the oracle for short words") {
  check_words_against_oracle(dinfty_graph(), 6);
  check_words_against_oracle(edge_graph(), 6);
  check_words_against_oracle(cycle_graph(4), 6);
}

TEST_CASE("normal form is the least geodesic word") {
  // enumerate every word up to length 6, bucket by oracle element, and
  // compare the normal form with the lexicographically least geodesic word
  for (const SimplicialGraph& g : {cycle_graph(4), path_graph(3), ladder_graph(2)}) {
    MatRep rep(g);
    std::unordered_map<std::vector<long long>, std::vector<int>, MatHash> least;
    std::unordered_map<std::vector<long long>, int, MatHash> norm;
    struct Frame {
      std::vector<int> w;
      std::vector<long long> m;
    };
    std::vector<Frame> stack{{{}, rep.identity()}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      auto nit = norm.find(f.m);
      if (nit == norm.end() || int(f.w.size()) < nit->second) {
        norm[f.m] = int(f.w.size());
        least[f.m] = f.w;
      } else if (int(f.w.size()) == nit->second && f.w < least[f.m]) {
        least[f.m] = f.w;
      }
      if (f.w.size() == 6) continue;
      for (int s = 0; s < g.size(); ++s) {
        Frame next{f.w, rep.mul(f.m, rep.gens[s])};
        next.w.push_back(s);
        stack.push_back(std::move(next));
      }
    }
    for (const auto& [m, w] : least) {
      GroupElement nf = normal_form(g, w);
      CHECK(nf.word == w);
    }
  }
}

TEST_CASE("subgroup membership by normal form letters") {
  SimplicialGraph c4 = cycle_graph(4);
  CayleyBall b(c4, 5);
  Bitset delta = c4.subset({"a", "c"});
  auto H = b.subgroup_elements(delta);
  // the rank-2 infinite dihedral subgroup has 2k+1 elements in its k-ball
  CHECK(H.size() == 11);
}

TEST_CASE("geodesic probes") {
  SimplicialGraph c5 = cycle_graph(5);
  ProbeResult r1 = geodesic_quasiconvexity_probe(c5, c5.subset({"a"}), 6, 0);
  CHECK(r1.pass);

  ProbeResult r2 = geodesic_quasiconvexity_probe(c5, c5.vertex_set(), 4, 0);
  CHECK(r2.pass);

  // geodesics between special-subgroup elements stay inside the subgroup, so
  // the exhaustive geodesic probe passes even where quasi-geodesics escape
  SimplicialGraph c4 = cycle_graph(4);
  ProbeResult r3 = geodesic_quasiconvexity_probe(c4, c4.subset({"a", "c"}), 6, 0);
  CHECK(r3.pass);
  CHECK(r3.pairs_checked > 0);

  SimplicialGraph lad5 = ladder_graph(5);
  ProbeResult r4 =
      geodesic_quasiconvexity_probe(lad5, lad5.subset({"a2", "a3"}), 4, 2);
  CHECK(r4.pass);
}

TEST_CASE("probe pass bookkeeping") {
  // geodesics track the subgroup even at a tiny D, so only the counters of a
  // Pass are observable here
  SimplicialGraph p3 = path_graph(3);
  ProbeResult r = geodesic_quasiconvexity_probe(p3, p3.subset({"a", "c"}), 5, 1);
  CHECK(r.pass);
  CHECK_FALSE(r.violation.has_value());
  CHECK(r.pairs_checked > 0);
}
