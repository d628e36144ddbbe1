#pragma once

#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "gridbend/analysis.hpp"
#include "gridbend/model.hpp"

namespace gridbend {

inline Graph path_graph(int n) {
  Graph g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

/// G(n,m): m distinct edges sampled uniformly, deterministic given seed.
inline Graph gnm_graph(int n, int m, std::uint64_t seed) {
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > max_m) {
    throw std::invalid_argument("gnm: m out of range [0, n(n-1)/2]");
  }
  Graph g;
  g.n = n;
  std::mt19937_64 rng(seed);
  std::set<Edge> chosen;
  while (static_cast<int>(chosen.size()) < m) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    chosen.emplace(u, v);
  }
  g.edges.assign(chosen.begin(), chosen.end());
  return g;
}

/// Vertices at (1,0,0),...,(n,0,0).
inline Placement line_placement(int n) {
  Placement pl;
  for (int i = 1; i <= n; ++i) pl.positions.push_back({i, 0, 0});
  return pl;
}

/// n distinct random points in [1,X] x [1,Y] x [1,Z].
inline Placement box_placement(int n, coord_t X, coord_t Y, coord_t Z,
                               std::uint64_t seed) {
  if (X < 1 || Y < 1 || Z < 1) {
    throw std::invalid_argument("box placement: dimensions must be >= 1");
  }
  if (static_cast<long long>(X) * Y * Z < n) {
    throw std::invalid_argument("box placement: box too small for n points");
  }
  std::mt19937_64 rng(seed);
  Placement pl;
  std::unordered_set<GridPoint, detail::PointHash> seen;
  while (static_cast<int>(pl.positions.size()) < n) {
    GridPoint p{1 + coord_t(rng() % std::uint64_t(X)),
                1 + coord_t(rng() % std::uint64_t(Y)),
                1 + coord_t(rng() % std::uint64_t(Z))};
    if (seen.insert(p).second) pl.positions.push_back(p);
  }
  return pl;
}

}  // namespace gridbend
