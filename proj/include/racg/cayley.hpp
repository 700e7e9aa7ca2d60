#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

// Element of the right-angled Coxeter group on a defining graph, held in
// shortlex normal form: a geodesic word, lexicographically least (in the
// graph's vertex order) among all geodesic representatives.
struct GroupElement {
  const SimplicialGraph* graph = nullptr;
  std::vector<int> word;

  explicit GroupElement(const SimplicialGraph& g) : graph(&g) {}
  GroupElement(const SimplicialGraph& g, std::vector<int> w)
      : graph(&g), word(std::move(w)) {}

  int length() const { return int(word.size()); }
  bool is_identity() const { return word.empty(); }

  std::string str() const {
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
      if (i) s += ' ';
      s += graph->label(word[i]);
    }
    return s;
  }

  bool operator==(const GroupElement& o) const {
    return graph == o.graph && word == o.word;
  }
};

namespace detail {

// Lexicographically least word in the commutation class of w. Equivalent
// words are exactly the linearizations of the dependence order on letter
// occurrences (occurrences of non-commuting letters keep their relative
// order), and the least linearization is obtained by always emitting the
// smallest occurrence whose earlier dependences are all emitted. A plain
// adjacent-swap bubble pass is not enough: lowering a letter past a smaller
// one can be necessary to unlock a larger gain further left.
inline void shortlex_minimize(const SimplicialGraph& g, std::vector<int>& w) {
  const int n = int(w.size());
  if (n < 2) return;
  std::vector<int> out;
  out.reserve(n);
  std::vector<char> used(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool avail = true;
      for (int j = 0; j < i && avail; ++j)
        if (!used[j] && !g.adjacent(w[j], w[i])) avail = false;
      if (avail && (best == -1 || w[i] < w[best])) best = i;
    }
    used[best] = 1;
    out.push_back(w[best]);
  }
  w = std::move(out);
}

}  // namespace detail

// Right multiplication by a generator. Scanning from the right, s cancels
// the rightmost equal letter it can commute past (generators are
// involutions); otherwise it is appended. Either way the word stays geodesic
// and is re-minimized, so the length changes by exactly one.
inline GroupElement multiply(const GroupElement& g, int s) {
  const SimplicialGraph& gr = *g.graph;
  if (s < 0 || s >= gr.size())
    throw std::invalid_argument("multiply: unknown generator index");
  std::vector<int> w = g.word;
  bool cancelled = false;
  for (int i = int(w.size()) - 1; i >= 0; --i) {
    if (w[i] == s) {
      w.erase(w.begin() + i);
      cancelled = true;
      break;
    }
    if (!gr.adjacent(w[i], s)) break;
  }
  if (!cancelled) w.push_back(s);
  detail::shortlex_minimize(gr, w);
  return GroupElement(gr, std::move(w));
}

inline GroupElement multiply(const GroupElement& g, const std::string& s) {
  return multiply(g, g.graph->index_of(s));
}

inline GroupElement normal_form(const SimplicialGraph& g,
                                const std::vector<int>& letters) {
  GroupElement e(g);
  for (int s : letters) e = multiply(e, s);
  return e;
}

inline GroupElement normal_form(const SimplicialGraph& g,
                                const std::vector<std::string>& letters) {
  GroupElement e(g);
  for (const auto& s : letters) e = multiply(e, s);
  return e;
}

struct BudgetExceeded : std::runtime_error {
  int reached_radius;
  size_t elements;
  BudgetExceeded(int radius, size_t n)
      : std::runtime_error("element budget exceeded at radius " +
                           std::to_string(radius) + " with " +
                           std::to_string(n) + " elements"),
        reached_radius(radius),
        elements(n) {}
};

constexpr size_t kDefaultElementBudget = 2'000'000;

// Ball of the Cayley graph: all elements of length <= R with generator
// edges. A deterministic function of (graph, R): elements are indexed in
// BFS order, ties resolved by generator order.
class CayleyBall {
 public:
  CayleyBall(const SimplicialGraph& g, int radius,
             size_t budget = kDefaultElementBudget)
      : graph_(&g), radius_(radius) {
    if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
    words_.push_back({});
    norm_.push_back(0);
    index_[encode({})] = 0;
    sphere_sizes_.assign(radius + 1, 0);
    sphere_sizes_[0] = 1;
    size_t lo = 0;
    for (int d = 1; d <= radius; ++d) {
      size_t hi = words_.size();
      for (size_t id = lo; id < hi; ++id)
        for (int s = 0; s < g.size(); ++s) {
          GroupElement h = multiply(GroupElement(g, words_[id]), s);
          if (h.length() != int(d)) continue;
          std::string key = encode(h.word);
          if (!index_.count(key)) {
            if (words_.size() >= budget) throw BudgetExceeded(d, words_.size());
            index_[key] = int(words_.size());
            words_.push_back(h.word);
            norm_.push_back(d);
            ++sphere_sizes_[d];
          }
        }
      lo = hi;
    }
    nbr_.assign(words_.size(), {});
    for (size_t id = 0; id < words_.size(); ++id)
      for (int s = 0; s < g.size(); ++s) {
        GroupElement h = multiply(GroupElement(g, words_[id]), s);
        auto it = index_.find(encode(h.word));
        if (it != index_.end()) nbr_[id].push_back(it->second);
      }
  }

  const SimplicialGraph& graph() const { return *graph_; }
  int radius() const { return radius_; }
  size_t size() const { return words_.size(); }
  const std::vector<int>& word(int id) const { return words_[id]; }
  int norm(int id) const { return norm_[id]; }
  const std::vector<int>& neighbors(int id) const { return nbr_[id]; }
  const std::vector<size_t>& sphere_sizes() const { return sphere_sizes_; }

  int id_of(const std::vector<int>& normal_form_word) const {
    auto it = index_.find(encode(normal_form_word));
    return it == index_.end() ? -1 : it->second;
  }

  std::string label(int id) const {
    return GroupElement(*graph_, words_[id]).str().empty()
               ? std::string("e")
               : GroupElement(*graph_, words_[id]).str();
  }

  std::vector<int> bfs_from(const std::vector<int>& sources) const {
    std::vector<int> d(words_.size(), -1);
    std::queue<int> q;
    for (int s : sources)
      if (d[s] == -1) {
        d[s] = 0;
        q.push(s);
      }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : nbr_[u])
        if (d[v] == -1) {
          d[v] = d[u] + 1;
          q.push(v);
        }
    }
    return d;
  }

  // Elements of the special subgroup generated by delta: exactly those whose
  // normal form uses delta letters only (all geodesic words of such an
  // element stay inside delta).
  std::vector<int> subgroup_elements(const Bitset& delta) const {
    std::vector<int> out;
    for (size_t id = 0; id < words_.size(); ++id) {
      bool in = true;
      for (int s : words_[id]) in = in && delta.test(s);
      if (in) out.push_back(int(id));
    }
    return out;
  }

 private:
  static std::string encode(const std::vector<int>& w) {
    std::string s;
    s.reserve(w.size() * 2);
    for (int x : w) {
      s.push_back(char(x & 0xff));
      s.push_back(char((x >> 8) & 0xff));
    }
    return s;
  }

  const SimplicialGraph* graph_;
  int radius_;
  std::vector<std::vector<int>> words_;
  std::vector<int> norm_;
  std::vector<std::vector<int>> nbr_;
  std::vector<size_t> sphere_sizes_;
  std::unordered_map<std::string, int> index_;
};

inline CayleyBall ball(const SimplicialGraph& g, int radius,
                       size_t budget = kDefaultElementBudget) {
  return CayleyBall(g, radius, budget);
}

struct ProbeViolation {
  std::vector<int> x, y, v;  // normal forms
  int dxy = 0, dxv = 0, dvy = 0;
  int dist_to_subgroup = 0;
};

struct ProbeResult {
  bool pass = true;
  std::optional<ProbeViolation> violation;
  size_t pairs_checked = 0;
  size_t pairs_uncertain = 0;   // pair distance not certifiable inside the ball
  size_t points_uncertain = 0;  // subgroup distance not certifiable
};

// Exhaustive geodesic quasiconvexity probe inside ball(R). A violation is a
// pair x,y in the special subgroup and a point v with d(x,v)+d(v,y)=d(x,y)
// and d(v, subgroup) > D, all distances certified exact against ball
// truncation:
//  - d(x,y) computed in the ball is exact when |x|+|y|+d(x,y) <= 2R (any
//    shorter path would fit inside the ball), and exactness of the two legs
//    then follows from the equality;
//  - d(v, subgroup) is exact when it is < R - |v|; otherwise v is
//    boundary-uncertain and never reported as a violation.
inline ProbeResult geodesic_quasiconvexity_probe(
    const SimplicialGraph& g, const Bitset& delta, int radius, int D,
    size_t budget = kDefaultElementBudget) {
  CayleyBall B(g, radius, budget);
  std::vector<int> H = B.subgroup_elements(delta);
  std::vector<int> dH = B.bfs_from(H);

  auto dist_exact = [&](int v) {
    return dH[v] != -1 && dH[v] < radius - B.norm(v);
  };

  ProbeResult out;
  std::vector<std::vector<int>> dist_from_h(H.size());
  for (size_t i = 0; i < H.size(); ++i) dist_from_h[i] = B.bfs_from({H[i]});

  for (size_t i = 0; i < H.size(); ++i) {
    for (size_t j = i + 1; j < H.size(); ++j) {
      int x = H[i], y = H[j];
      int dxy = dist_from_h[i][y];
      if (dxy == -1) continue;
      if (B.norm(x) + B.norm(y) + dxy > 2 * radius) {
        ++out.pairs_uncertain;
        continue;
      }
      ++out.pairs_checked;
      for (size_t v = 0; v < B.size(); ++v) {
        int dxv = dist_from_h[i][v], dvy = dist_from_h[j][v];
        if (dxv == -1 || dvy == -1 || dxv + dvy != dxy) continue;
        if (!dist_exact(int(v))) {
          if (dH[v] == -1 || dH[v] > D) ++out.points_uncertain;
          continue;
        }
        if (dH[v] > D) {
          out.pass = false;
          out.violation = ProbeViolation{B.word(x),  B.word(y), B.word(int(v)),
                                         dxy,        dxv,       dvy,
                                         dH[v]};
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace racg
