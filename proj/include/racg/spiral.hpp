#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "racg/metric_graph.hpp"
#include "racg/rational.hpp"

namespace racg {

// Paths in the square lattice with the l1 metric (the product of two lines).
struct LatticePoint {
  long long x = 0, y = 0;
  bool operator==(const LatticePoint& o) const { return x == o.x && y == o.y; }
};

inline long long l1(const LatticePoint& a, const LatticePoint& b) {
  return std::llabs(a.x - b.x) + std::llabs(a.y - b.y);
}

// Unit-step path, parameterized by arc length (the step index).
struct LatticePath {
  std::vector<LatticePoint> pts;

  long long duration() const { return (long long)pts.size() - 1; }

  void validate() const {
    if (pts.empty()) throw std::invalid_argument("empty path");
    for (size_t i = 1; i < pts.size(); ++i)
      if (l1(pts[i - 1], pts[i]) != 1)
        throw std::invalid_argument("path steps must have unit length");
  }
};

// Quasi-geodesic gauge (lambda, eps), held as exact rationals so boundary
// cases like the three-sides path at (3,0) compare exactly.
struct Gauge {
  Rational lambda{1, 1};
  Rational eps{0, 1};

  // (1/lambda)|t-s| - eps <= d
  bool lower_ok(long long dt, long long d) const {
    return dt * lambda.den * eps.den <=
           lambda.num * (d * eps.den + eps.num);
  }
  // d <= lambda|t-s| + eps
  bool upper_ok(long long dt, long long d) const {
    return d * lambda.den * eps.den <=
           lambda.num * dt * eps.den + eps.num * lambda.den;
  }

  std::string str() const { return "(" + lambda.str() + "," + eps.str() + ")"; }
};

struct GaugeViolation {
  size_t t = 0, s = 0;
  long long dt = 0, dist = 0;
  bool lower = false;  // which side failed
};

// Exhaustive two-sided quasi-geodesic verification over all parameter pairs;
// exact in the l1 lattice.
inline std::optional<GaugeViolation> quasigeodesic_check(const LatticePath& p,
                                                         const Gauge& g) {
  p.validate();
  for (size_t i = 0; i < p.pts.size(); ++i)
    for (size_t j = i + 1; j < p.pts.size(); ++j) {
      long long dt = (long long)(j - i);
      long long d = l1(p.pts[i], p.pts[j]);
      if (!g.lower_ok(dt, d)) return GaugeViolation{i, j, dt, d, true};
      if (!g.upper_ok(dt, d)) return GaugeViolation{i, j, dt, d, false};
    }
  return std::nullopt;
}

// Same verification for a unit-step vertex path in a metric graph; distances
// are exact BFS distances.
inline std::optional<GaugeViolation> quasigeodesic_check(
    const MetricGraph& X, const std::vector<int>& path, const Gauge& g) {
  if (path.empty()) throw std::invalid_argument("empty path");
  for (size_t i = 1; i < path.size(); ++i) {
    bool edge = false;
    for (int w : X.neighbors(path[i - 1])) edge = edge || w == path[i];
    if (!edge) throw std::invalid_argument("path steps must be edges");
  }
  for (size_t i = 0; i < path.size(); ++i) {
    std::vector<int> d = X.bfs({path[i]});
    for (size_t j = i + 1; j < path.size(); ++j) {
      long long dt = (long long)(j - i);
      long long dist = d[path[j]];
      if (!g.lower_ok(dt, dist)) return GaugeViolation{i, j, dt, dist, true};
      if (!g.upper_ok(dt, dist)) return GaugeViolation{i, j, dt, dist, false};
    }
  }
  return std::nullopt;
}

// Constants making every admissible spiral a quasi-geodesic. The upper bound
// is (K+1)|t-s| + 2L. For the lower bound, the geometric growth confines the
// early segments to a (2/N)-fraction of the last full one, which bounds the
// distance below by (1/2K) of the parameter gap back to the last corner minus
// 3K^2 L, while that gap is at least a third of |t-s| minus L; composed,
// (1/6K)|t-s| - (3K^2 + 1/6K) L. Both sides are dominated by lambda = 6K,
// eps = L(18K^3 + 1) / 6K.
inline Gauge spiral_constants(long long K, long long L) {
  if (K < 1 || L < 0) throw std::invalid_argument("need K >= 1, L >= 0");
  return Gauge{Rational(6 * K, 1), Rational(L * (18 * K * K * K + 1), 6 * K)};
}

// Alternating-axis concatenation of straight segments in the lattice.
struct SpiralSegment {
  bool horizontal = true;
  long long displacement = 0;  // signed, nonzero
};

struct SpiralSpec {
  long long K = 1, L = 0;
  long long slope = 0;  // N
  LatticePoint start{0, 0};
  std::vector<SpiralSegment> segments;

  void validate() const {
    if (segments.empty()) throw std::invalid_argument("spiral needs segments");
    if (slope <= 4 * K * K)
      throw std::invalid_argument("slope must exceed 4K^2");
    long long first = std::llabs(segments[0].displacement);
    if (first < 3 * K * K * L + 1)
      throw std::invalid_argument("first segment too short");
    for (size_t i = 0; i < segments.size(); ++i) {
      if (segments[i].displacement == 0)
        throw std::invalid_argument("zero-length segment");
      if (i > 0 && segments[i].horizontal == segments[i - 1].horizontal)
        throw std::invalid_argument("segments must alternate axes");
    }
    // slope constraint on every consecutive pair; the last segment is free
    for (size_t i = 0; i + 2 < segments.size(); ++i)
      if (std::llabs(segments[i + 1].displacement) <
          slope * std::llabs(segments[i].displacement))
        throw std::invalid_argument("slope condition fails at segment " +
                                    std::to_string(i + 1));
  }

  LatticePath build() const {
    validate();
    LatticePath p;
    p.pts.push_back(start);
    for (const auto& seg : segments) {
      long long step = seg.displacement > 0 ? 1 : -1;
      for (long long k = 0; k < std::llabs(seg.displacement); ++k) {
        LatticePoint q = p.pts.back();
        (seg.horizontal ? q.x : q.y) += step;
        p.pts.push_back(q);
      }
    }
    return p;
  }
};

// Deterministic sampling grid of admissible spirals: slope N = 4K^2 + 1,
// first length at the threshold and one above, length chains growing by
// exactly N with a free final segment, both starting axes and a spread of
// turning patterns.
inline std::vector<SpiralSpec> generate_spirals(long long K, long long L,
                                                int max_segments,
                                                long long max_len) {
  long long N = 4 * K * K + 1;
  long long m0 = 3 * K * K * L + 1;
  std::vector<SpiralSpec> out;
  for (long long first : {m0, m0 + 1}) {
    if (first > max_len) continue;
    std::vector<long long> chain{first};
    while (chain.back() <= max_len / N) chain.push_back(chain.back() * N);
    for (int nseg = 2; nseg <= max_segments; ++nseg) {
      if (nseg - 1 > int(chain.size())) break;
      std::vector<long long> lens(chain.begin(), chain.begin() + (nseg - 1));
      for (long long last : {1LL, first + 2, max_len}) {
        lens.push_back(last);
        for (int firstaxis = 0; firstaxis < 2; ++firstaxis) {
          for (unsigned pat = 0; pat < 4u; ++pat) {
            SpiralSpec s;
            s.K = K;
            s.L = L;
            s.slope = N;
            for (int i = 0; i < nseg; ++i) {
              long long sign;
              switch (pat) {
                case 0: sign = 1; break;                        // staircase
                case 1: sign = (i / 2) % 2 ? -1 : 1; break;     // true spiral
                case 2: sign = i % 2 ? -1 : 1; break;           // zigzag
                default: sign = (i % 3) ? -1 : 1; break;
              }
              s.segments.push_back(
                  {(i % 2 == 0) == (firstaxis == 0), sign * lens[i]});
            }
            out.push_back(std::move(s));
          }
        }
        lens.pop_back();
      }
    }
  }
  return out;
}

// Three sides of an n x n lattice square, the fourth side lying on the
// x-axis: (0,0) up to (0,n), across to (n,n), down to (n,0).
inline LatticePath three_sides_path(long long n) {
  if (n < 1) throw std::invalid_argument("square side must be >= 1");
  LatticePath p;
  p.pts.push_back({0, 0});
  for (long long k = 1; k <= n; ++k) p.pts.push_back({0, k});
  for (long long k = 1; k <= n; ++k) p.pts.push_back({k, n});
  for (long long k = 1; k <= n; ++k) p.pts.push_back({n, n - k});
  return p;
}

// Largest distance from the path to the x-axis; for the three-sides family
// this is n, so any proposed neighborhood bound Q is exceeded at n = Q + 1.
inline long long max_distance_to_axis(const LatticePath& p) {
  long long m = 0;
  for (const auto& q : p.pts) m = std::max(m, std::llabs(q.y));
  return m;
}

}  // namespace racg
