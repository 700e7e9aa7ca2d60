#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "racg/rational.hpp"

namespace racg {

// Unit-length metric graph with a marked subspace Y. Weighted edges are
// subdivided on ingestion so every distance below is an integer.
class MetricGraph {
 public:
  int add_vertex(std::string label, bool marked = false) {
    adj_.emplace_back();
    in_y_.push_back(marked ? 1 : 0);
    label_.push_back(std::move(label));
    return int(adj_.size()) - 1;
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("metric graph: self-loop");
    for (int w : adj_[u])
      if (w == v) return;  // set semantics
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  // weighted edge of positive integer length, unit-subdivided
  void add_path(int u, int v, long long len, const std::string& tag,
                bool mark_interior = false) {
    if (len < 1) throw std::invalid_argument("edge length must be >= 1");
    int prev = u;
    for (long long k = 1; k < len; ++k) {
      int w = add_vertex(tag + "." + std::to_string(k), mark_interior);
      add_edge(prev, w);
      prev = w;
    }
    add_edge(prev, v);
  }

  void mark(int v) { in_y_[v] = 1; }
  bool marked(int v) const { return in_y_[v] != 0; }
  int size() const { return int(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const std::string& label(int v) const { return label_[v]; }

  std::vector<int> marked_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
      if (in_y_[v]) out.push_back(v);
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<int> bfs(const std::vector<int>& sources) const {
    std::vector<int> d(size(), -1);
    std::queue<int> q;
    for (int s : sources)
      if (d[s] == -1) {
        d[s] = 0;
        q.push(s);
      }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj_[u])
        if (d[v] == -1) {
          d[v] = d[u] + 1;
          q.push(v);
        }
    }
    return d;
  }

  // BFS restricted to vertices where allowed[v] != 0
  std::vector<int> bfs_restricted(int source, const std::vector<char>& allowed) const {
    std::vector<int> d(size(), -1);
    if (!allowed[source]) return d;
    std::queue<int> q;
    d[source] = 0;
    q.push(source);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj_[u])
        if (allowed[v] && d[v] == -1) {
          d[v] = d[u] + 1;
          q.push(v);
        }
    }
    return d;
  }

  std::vector<int> dist_to_marked() const { return bfs(marked_vertices()); }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<char> in_y_;
  std::vector<std::string> label_;
};

// ---------------------------------------------------------------------------
// model spaces and fixtures

// Ray x0...x_{i_max} with d(x_{i-1}, x_i) = i, marked as Y, plus an arc J_i of
// length f(i) joining x_{i-1} to x_i; everything unit-subdivided. f must be
// positive and non-decreasing on the sampled range.
struct ModelSpace {
  MetricGraph g;
  std::vector<int> anchor;  // ids of x_0..x_{i_max}
};

inline ModelSpace model_space(const std::function<long long(int)>& f, int i_max) {
  if (i_max < 1) throw std::invalid_argument("model space needs i_max >= 1");
  long long prev = LLONG_MIN;
  for (int i = 1; i <= i_max; ++i) {
    long long fi = f(i);
    if (fi < 1)
      throw std::invalid_argument("arc length f(" + std::to_string(i) +
                                  ") = " + std::to_string(fi) + " is below 1");
    if (fi < prev)
      throw std::invalid_argument("arc length function must be non-decreasing");
    prev = fi;
  }
  ModelSpace m;
  m.anchor.push_back(m.g.add_vertex("x0", true));
  for (int i = 1; i <= i_max; ++i) {
    int xi = m.g.add_vertex("x" + std::to_string(i), true);
    m.g.add_path(m.anchor.back(), xi, i, "y" + std::to_string(i), true);
    m.g.add_path(m.anchor.back(), xi, f(i), "J" + std::to_string(i), false);
    m.anchor.push_back(xi);
  }
  return m;
}

// Box of the square lattice, x in [0,width), y in [-half_height, half_height],
// with the x-axis marked.
struct GridSpace {
  MetricGraph g;
  int width = 0, half_height = 0;
  int id(int x, int y) const { return x * (2 * half_height + 1) + (y + half_height); }
};

inline GridSpace grid_space(int width, int half_height) {
  if (width < 1 || half_height < 0)
    throw std::invalid_argument("grid: width >= 1 and half height >= 0 required");
  GridSpace s;
  s.width = width;
  s.half_height = half_height;
  for (int x = 0; x < width; ++x)
    for (int y = -half_height; y <= half_height; ++y)
      s.g.add_vertex("(" + std::to_string(x) + "," + std::to_string(y) + ")",
                     y == 0);
  for (int x = 0; x < width; ++x)
    for (int y = -half_height; y <= half_height; ++y) {
      if (x + 1 < width) s.g.add_edge(s.id(x, y), s.id(x + 1, y));
      if (y + 1 <= half_height) s.g.add_edge(s.id(x, y), s.id(x, y + 1));
    }
  return s;
}

// Spine path marked as Y with a branch of fixed length at every spine vertex.
inline MetricGraph comb_tree(int spine_len, int branch_len) {
  MetricGraph g;
  std::vector<int> spine;
  for (int i = 0; i <= spine_len; ++i)
    spine.push_back(g.add_vertex("s" + std::to_string(i), true));
  for (int i = 0; i < spine_len; ++i) g.add_edge(spine[i], spine[i + 1]);
  for (int i = 0; i <= spine_len; ++i) {
    int tip = g.add_vertex("t" + std::to_string(i), false);
    g.add_path(spine[i], tip, branch_len, "b" + std::to_string(i), false);
  }
  return g;
}

// ---------------------------------------------------------------------------
// lower relative divergence

// sigma^n_rho(r): infimum of d_{rho r}(x1, x2) over x1, x2 at distance
// exactly r from Y that are connected avoiding the open r-neighborhood of Y
// and at ambient distance >= n r; infinite (nullopt) when no such pair
// exists. d_{rho r} is the path metric on vertices at distance >= ceil(rho r)
// from Y.
inline std::optional<long long> divergence(const MetricGraph& X, Rational rho,
                                           int n, int r,
                                           const std::vector<int>& dist_y) {
  if (!(rho.num >= 1 && rho.num <= rho.den))
    throw std::invalid_argument("rho must lie in (0,1]");
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (r < 1) throw std::invalid_argument("r must be >= 1");

  std::vector<int> boundary;
  for (int v = 0; v < X.size(); ++v)
    if (dist_y[v] == r) boundary.push_back(v);
  if (boundary.empty()) return std::nullopt;

  std::vector<char> allowed_r(X.size(), 0), allowed_rho(X.size(), 0);
  long long cut = rho.mul_ceil(r);  // forbidden: dist <= cut - 1
  for (int v = 0; v < X.size(); ++v) {
    if (dist_y[v] >= r) allowed_r[v] = 1;
    if (dist_y[v] >= cut) allowed_rho[v] = 1;
  }

  // components of the r-complement decide d_r(x1,x2) < infinity
  std::vector<int> comp(X.size(), -1);
  int nc = 0;
  for (int v = 0; v < X.size(); ++v) {
    if (!allowed_r[v] || comp[v] != -1) continue;
    std::queue<int> q;
    q.push(v);
    comp[v] = nc;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : X.neighbors(u))
        if (allowed_r[w] && comp[w] == -1) {
          comp[w] = nc;
          q.push(w);
        }
    }
    ++nc;
  }

  std::optional<long long> best;
  for (size_t i = 0; i < boundary.size(); ++i) {
    int x1 = boundary[i];
    std::vector<int> amb = X.bfs({x1});
    std::vector<int> drho = X.bfs_restricted(x1, allowed_rho);
    for (size_t j = i + 1; j < boundary.size(); ++j) {
      int x2 = boundary[j];
      if (comp[x1] != comp[x2]) continue;
      if (amb[x2] == -1 || amb[x2] < (long long)n * r) continue;
      if (drho[x2] == -1) continue;  // unreachable avoiding the rho r-neighborhood
      if (!best || drho[x2] < *best) best = drho[x2];
    }
  }
  return best;
}

inline std::optional<long long> divergence(const MetricGraph& X, Rational rho,
                                           int n, int r) {
  return divergence(X, rho, n, r, X.dist_to_marked());
}

struct DivergenceEntry {
  Rational rho;
  int n = 0, r = 0;
  std::optional<long long> sigma;
};

// Sweep over a parameter grid; cells are independent and the result is a
// deterministic function of the inputs regardless of thread count.
inline std::vector<DivergenceEntry> divergence_profile(
    const MetricGraph& X, const std::vector<Rational>& rhos,
    const std::vector<int>& ns, const std::vector<int>& rs, int threads = 1) {
  std::vector<int> dist_y = X.dist_to_marked();
  std::vector<DivergenceEntry> out;
  for (Rational rho : rhos)
    for (int n : ns)
      for (int r : rs) out.push_back({rho, n, r, std::nullopt});
  auto work = [&](size_t begin, size_t stride) {
    for (size_t k = begin; k < out.size(); k += stride)
      out[k].sigma = divergence(X, out[k].rho, out[k].n, out[k].r, dist_y);
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return out;
}

// ---------------------------------------------------------------------------
// two-sided divergence bounds on model spaces

struct BoundsRow {
  int r = 0;
  std::optional<long long> sigma;
  long long lower = 0, upper = 0;  // with slack applied
  bool pass = false;
};

struct BoundsReport {
  std::vector<BoundsRow> rows;
  bool all_pass = true;
  int i_max = 0;
  long long slack = 0;
};

// Model spaces realize sigma as f(i*) - 2r on the smallest arc i* admitting a
// valid pair, i.e. the least i with i >= (n-2) r and f(i) >= (n+2) r. Arcs
// beyond i* only produce larger values, so a model truncated just past the
// largest such i* computes the same infimum as the unbounded space.
inline int arcs_needed(const std::function<long long(int)>& f, int n, int r) {
  int i = 1;
  while (i < (n - 2) * r || f(i) < (long long)(n + 2) * r) ++i;
  return i;
}

inline BoundsReport check_arc_model_bounds(const std::function<long long(int)>& f,
                                          int n, Rational rho, int r_lo,
                                          int r_hi) {
  if (n < 3) throw std::invalid_argument("bounds check needs n >= 3");
  if (r_lo < 1 || r_hi < r_lo) throw std::invalid_argument("bad r range");
  BoundsReport rep;
  rep.slack = 2 * n + 8;
  int need = 1;
  for (int r = r_lo; r <= r_hi; ++r) need = std::max(need, arcs_needed(f, n, r));
  rep.i_max = need + 1;

  ModelSpace m = model_space(f, rep.i_max);
  std::vector<int> dist_y = m.g.dist_to_marked();
  for (int r = r_lo; r <= r_hi; ++r) {
    BoundsRow row;
    row.r = r;
    row.sigma = divergence(m.g, rho, n, r, dist_y);
    row.lower = f(r) - 2 * r - rep.slack;
    row.upper = f((n + 3) * r) + rep.slack;  // callers saturate large growth
    row.pass = row.sigma && *row.sigma >= row.lower && *row.sigma <= row.upper;
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// contraction testing

struct ContractionResult {
  bool pass = true;
  int condition = 0;                  // 1, 2 or 3 on failure
  std::vector<int> witness;           // condition 1: {u,v}; 2: {y}; 3: {center,p,q}
  long long value = 0, allowed = 0;
};

// Closest-point retraction: every vertex maps to a nearest marked vertex,
// ties resolved toward the smaller vertex id.
inline std::vector<int> closest_point_retraction(const MetricGraph& X) {
  std::vector<int> ret(X.size(), -1);
  std::vector<int> d(X.size(), -1);
  std::queue<int> q;
  for (int v = 0; v < X.size(); ++v)
    if (X.marked(v)) {
      d[v] = 0;
      ret[v] = v;
      q.push(v);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : X.neighbors(u))
      if (d[w] == -1) {
        d[w] = d[u] + 1;
        ret[w] = ret[u];
        q.push(w);
      }
  }
  return ret;
}

// Falsifier for a given retraction at constants (A, D): checks that the map
// moves Y by at most D, is coarsely Lipschitz across every unit edge, and
// collapses each ball of radius floor(A d(x,Y)) to image diameter at most D.
// The first failing condition is returned with its witness. Passing certifies
// nothing about other retractions.
inline ContractionResult contraction_test(const MetricGraph& X,
                                          const std::vector<int>& retraction,
                                          Rational A, long long D) {
  if (!(A.num >= 1 && A.num <= A.den))
    throw std::invalid_argument("A must lie in (0,1]");
  if (D < 1) throw std::invalid_argument("D must be >= 1");
  if (int(retraction.size()) != X.size())
    throw std::invalid_argument("retraction must be total");
  for (int v = 0; v < X.size(); ++v)
    if (retraction[v] < 0 || retraction[v] >= X.size() ||
        !X.marked(retraction[v]))
      throw std::invalid_argument("retraction must land in Y");

  std::vector<int> ymap(X.size(), -1);
  std::vector<int> ys = X.marked_vertices();
  for (size_t i = 0; i < ys.size(); ++i) ymap[ys[i]] = int(i);
  std::vector<std::vector<int>> ydist(ys.size());
  for (size_t i = 0; i < ys.size(); ++i) ydist[i] = X.bfs({ys[i]});
  auto dy = [&](int a, int b) { return ydist[ymap[a]][b]; };

  // (2) the retraction coarsely fixes Y
  for (int y : ys)
    if (dy(y, retraction[y]) > D || dy(y, retraction[y]) == -1)
      return {false, 2, {y}, dy(y, retraction[y]), D};

  // (1) coarse Lipschitz across unit edges
  for (auto [u, v] : X.edges()) {
    long long d = dy(retraction[u], retraction[v]);
    if (d == -1 || d > 2 * D) return {false, 1, {u, v}, d, 2 * D};
  }

  // (3) balls of radius floor(A d(x,Y)) have image diameter <= D
  std::vector<int> dist_y = X.dist_to_marked();
  for (int x = 0; x < X.size(); ++x) {
    long long R = A.mul_floor(dist_y[x]);
    if (R <= 0) continue;
    // collect the image of the exact ball
    std::vector<int> d(X.size(), -1);
    std::queue<int> q;
    d[x] = 0;
    q.push(x);
    std::vector<int> image;
    image.push_back(retraction[x]);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (d[u] == R) continue;
      for (int w : X.neighbors(u))
        if (d[w] == -1) {
          d[w] = d[u] + 1;
          image.push_back(retraction[w]);
          q.push(w);
        }
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    for (size_t i = 0; i < image.size(); ++i)
      for (size_t j = i + 1; j < image.size(); ++j) {
        long long dd = dy(image[i], image[j]);
        if (dd > D || dd == -1)
          return {false, 3, {x, image[i], image[j]}, dd, D};
      }
  }
  return {};
}

// Quadratic lower bound that contraction at (A, D) forces on every finite
// divergence value with n >= 4D+2 and r > 8D: sigma >= (A rho / 4D) r^2.
// Returns the offending entries (empty means consistent).
inline std::vector<DivergenceEntry> contraction_divergence_conflicts(
    const std::vector<DivergenceEntry>& entries, Rational A, long long D) {
  std::vector<DivergenceEntry> bad;
  for (const auto& e : entries) {
    if (!e.sigma) continue;
    if (e.n < 4 * D + 2 || e.r <= 8 * D) continue;
    // sigma >= A.num*rho.num*r^2 / (A.den*rho.den*4D)
    long long lhs = *e.sigma * A.den * e.rho.den * 4 * D;
    long long rhs = A.num * e.rho.num * (long long)e.r * e.r;
    if (lhs < rhs) bad.push_back(e);
  }
  return bad;
}

}  // namespace racg
