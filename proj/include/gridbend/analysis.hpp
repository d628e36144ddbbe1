#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gridbend/drawer.hpp"
#include "gridbend/model.hpp"
#include "gridbend/verifier.hpp"

// Volume accounting. Volume is the number of grid points in the minimum
// axis-aligned box containing the drawing, i.e. the product of (extent+1)
// per axis, not a product of geometric side lengths.

namespace gridbend {

struct BoundingBox {
  GridPoint min{};
  GridPoint max{};

  coord_t dim_x() const { return max.x - min.x + 1; }
  coord_t dim_y() const { return max.y - min.y + 1; }
  coord_t dim_z() const { return max.z - min.z + 1; }
  coord_t volume() const { return dim_x() * dim_y() * dim_z(); }
};

struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long n, long long d) {
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return {n / g, d / g};
  }
  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct BoundsReport {
  coord_t achieved_volume = 0;
  coord_t upper_bound_volume = 0;
  Rational cutwidth_lower_bound;  // kn/2
  bool collinear_input = false;
};

inline BoundingBox bounding_box(const Drawing& d) {
  if (d.graph.n < 1) throw std::invalid_argument("bounding_box: empty drawing");
  BoundingBox box{d.placement.positions[0], d.placement.positions[0]};
  const auto extend = [&box](const GridPoint& p) {
    box.min = {std::min(box.min.x, p.x), std::min(box.min.y, p.y),
               std::min(box.min.z, p.z)};
    box.max = {std::max(box.max.x, p.x), std::max(box.max.y, p.y),
               std::max(box.max.z, p.z)};
  };
  for (const auto& p : d.placement.positions) extend(p);
  for (const auto& b : d.bends) extend(b);
  return box;
}

/// (X+2)(Y+2)max(Z, n+4m) for vertices in an X x Y x Z box.
inline coord_t upper_bound_volume(coord_t n, coord_t m, coord_t X, coord_t Y,
                                  coord_t Z) {
  return (X + 2) * (Y + 2) * std::max(Z, n + 4 * m);
}

// Exact cutwidth by enumerating vertex orderings (reversal symmetry halves
// the search). Desk scale only.
inline int cutwidth_bruteforce(const Graph& g) {
  if (g.n > 9) {
    throw std::invalid_argument("cutwidth_bruteforce: n > 9 not supported");
  }
  if (g.n <= 1 || g.edges.empty()) return 0;
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> where(g.n);
  int best = g.m();
  do {
    if (perm.front() > perm.back()) continue;  // reversal-symmetric twin
    for (int i = 0; i < g.n; ++i) where[perm[i]] = i;
    int width = 0;
    for (int gap = 0; gap + 1 < g.n && width < best; ++gap) {
      int cut = 0;
      for (const auto& [u, v] : g.edges) {
        cut += (std::min(where[u], where[v]) <= gap &&
                std::max(where[u], where[v]) > gap);
      }
      width = std::max(width, cut);
    }
    best = std::min(best, width);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Cutwidth of the complete graph K_n: floor(n^2/4).
inline long long cutwidth_complete(long long n) { return n * n / 4; }

/// kn/2 — volume lower bound for 1-bend drawings with vertices on a line.
inline Rational line_lower_bound(long long n, long long k) {
  return Rational::make(k * n, 2);
}

inline bool placement_collinear(const Placement& pl) {
  const auto& pts = pl.positions;
  if (pts.size() <= 2) return true;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (!collinear(pts[0], pts[1], pts[i])) return false;
  }
  return true;
}

inline Graph complete_graph(int n) {
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

// K_n with vertices (1,0,0),...,(n,0,0): draw, verify, and sandwich the
// achieved volume between kn/2 and the box upper bound.
inline BoundsReport kn_line_experiment(int n, const DrawOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("kn_line_experiment: n < 2");
  const Graph g = complete_graph(n);
  Placement pl;
  for (int i = 1; i <= n; ++i) pl.positions.push_back({i, 0, 0});

  const DrawResult res = draw_graph(g, pl, opts);
  if (!verify(res.drawing).pass()) {
    throw std::logic_error("kn_line_experiment: drawing failed verification");
  }

  BoundsReport rep;
  rep.collinear_input = true;
  rep.achieved_volume = bounding_box(res.drawing).volume();
  rep.upper_bound_volume = upper_bound_volume(n, g.m(), n, 1, 1);
  rep.cutwidth_lower_bound = line_lower_bound(n, cutwidth_complete(n));
  // achieved >= kn/2  <=>  2*achieved >= kn
  if (2 * rep.achieved_volume < cutwidth_complete(n) * n ||
      rep.achieved_volume > rep.upper_bound_volume) {
    throw std::logic_error("kn_line_experiment: volume outside bounds");
  }
  return rep;
}

}  // namespace gridbend
