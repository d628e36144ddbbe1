#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "gridbend/geometry.hpp"
#include "gridbend/model.hpp"

// One-bend routing with fixed vertex locations. Each edge vw gets a bend on
// the vertical candidate line through an anchor (x,y) with x adjacent to v's
// x-coordinate and y adjacent to w's y-coordinate; z is found by an ascending
// scan that rejects candidates colliding with vertices or drawn segments.

namespace gridbend {

struct Anchor {
  coord_t x = 0;
  coord_t y = 0;
};

enum class EdgeOrder { Input, Random };

struct DrawOptions {
  EdgeOrder order = EdgeOrder::Input;
  std::uint64_t seed = 0;                 // used when order == Random
  std::optional<coord_t> z_start;         // default: min vertex z
  bool bound_check = false;
};

struct EdgeDrawStats {
  int edge_index = 0;
  coord_t z = 0;
  int rejected = 0;  // z candidates skipped before this bend was accepted
};

struct DrawResult {
  Drawing drawing;
  std::vector<EdgeDrawStats> stats;   // in processing order
  std::vector<int> order;             // edge indices in processing order
  std::vector<int> bound_violations;  // edge indices, when bound_check is on
};

// Tie-break: prefer a-1 over a+1 and q-1 over q+1. Each candidate set
// excludes at most one value, so a choice always exists.
inline Anchor choose_anchor(const GridPoint& v_pos, const GridPoint& w_pos) {
  const coord_t a = v_pos.x, b = v_pos.y;
  const coord_t p = w_pos.x, q = w_pos.y;
  const coord_t x = (a - 1 == p) ? a + 1 : a - 1;
  const coord_t y = (q - 1 == b) ? q + 1 : q - 1;
  return {x, y};
}

struct DrawState {
  const Placement* placement = nullptr;
  std::vector<Segment> segments;       // two per routed edge
  std::vector<int> segment_owner;      // edge index per segment
};

namespace detail {

// Contact between a fresh half-edge segment anchored at vertex `shared` and
// an already drawn segment is allowed only when the drawn segment's edge is
// incident to `shared` and the contact is exactly the vertex point.
inline bool half_segment_clear(const DrawState& state, const Graph& g,
                               int shared_vertex, const Segment& seg) {
  const GridPoint& vp = (*state.placement).positions[shared_vertex];
  for (std::size_t i = 0; i < state.segments.size(); ++i) {
    const auto r = segments_intersect(seg, state.segments[i]);
    if (r.kind == IntersectionKind::Disjoint) continue;
    if (r.kind == IntersectionKind::Overlap) return false;
    const auto [eu, ev] = g.edges[state.segment_owner[i]];
    const bool incident = (eu == shared_vertex || ev == shared_vertex);
    if (!(incident && r.at_grid_point && r.point == vp)) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_bend_feasible(const DrawState& state, const Graph& g, int v,
                             int w, const GridPoint& bend) {
  const auto& pos = state.placement->positions;
  // (1) no vertex at the candidate point
  for (const auto& p : pos) {
    if (p == bend) return false;
  }
  // (4) a bend collinear with v and w can put the two halves on top of
  // each other; the line vw meets the candidate line at most once, so this
  // rejects at most one z
  if (collinear(pos[v], bend, pos[w])) return false;
  // (2)/(3) the two halves avoid everything already drawn
  if (!detail::half_segment_clear(state, g, v, {pos[v], bend})) return false;
  if (!detail::half_segment_clear(state, g, w, {pos[w], bend})) return false;
  return true;
}

namespace detail {

// A vertical line over (x,y) works as a candidate when every point on it is
// visible from both endpoints regardless of z. The segment from v=(a,b,c)
// to (x,y,z) passes through no other grid point iff
// gcd(|x-a|,|y-b|,|z-c|)=1, which holds for every z exactly when
// gcd(|x-a|,|y-b|)=1. The line must also avoid both endpoint columns, so
// no bend coincides with an endpoint and neither half is ever vertical.
inline bool anchor_ok(const GridPoint& v_pos, const GridPoint& w_pos,
                      coord_t x, coord_t y) {
  const auto col_ok = [x, y](const GridPoint& e) {
    return std::gcd(std::abs(x - e.x), std::abs(y - e.y)) == 1;
  };
  return col_ok(v_pos) && col_ok(w_pos);
}

// Candidate vertical lines, preferred tie-break first, then the rest of the
// unit-step neighborhood grid in deterministic order. A drawn segment can
// block a whole candidate line when it is coplanar with the sweep plane, so
// a single line is not enough; the grid gives up to a few dozen distinct
// sweep planes.
inline std::vector<Anchor> anchor_candidates(const GridPoint& v_pos,
                                             const GridPoint& w_pos) {
  std::vector<Anchor> out;
  const auto add = [&out](coord_t x, coord_t y) {
    for (const Anchor& a : out) {
      if (a.x == x && a.y == y) return;
    }
    out.push_back({x, y});
  };
  const Anchor pref = choose_anchor(v_pos, w_pos);
  add(pref.x, pref.y);
  const coord_t xs[] = {v_pos.x - 1, v_pos.x + 1, w_pos.x - 1,
                        w_pos.x + 1, v_pos.x,     w_pos.x};
  const coord_t ys[] = {w_pos.y - 1, w_pos.y + 1, v_pos.y - 1,
                        v_pos.y + 1, w_pos.y,     v_pos.y};
  for (coord_t y : ys) {
    for (coord_t x : xs) {
      if (anchor_ok(v_pos, w_pos, x, y)) add(x, y);
    }
  }
  return out;
}

// Coprime offsets exist in every direction at every distance, so valid
// candidate lines are unbounded; the square ring of radius k+1 around v's
// column feeds the fallback with fresh sweep planes.
inline std::vector<Anchor> anchor_extension(const GridPoint& v_pos,
                                            const GridPoint& w_pos,
                                            coord_t k) {
  std::vector<Anchor> out;
  const coord_t r = k + 1;
  const auto consider = [&](coord_t x, coord_t y) {
    if (anchor_ok(v_pos, w_pos, x, y)) out.push_back({x, y});
  };
  for (coord_t d = -r; d <= r; ++d) {
    consider(v_pos.x + d, v_pos.y - r);
    consider(v_pos.x + d, v_pos.y + r);
    if (d != -r && d != r) {
      consider(v_pos.x - r, v_pos.y + d);
      consider(v_pos.x + r, v_pos.y + d);
    }
  }
  return out;
}

}  // namespace detail

// Ascending z-scan on the preferred anchor line. A drawn segment coplanar
// with the sweep plane (its xy-projection collinear with the projection of
// the new half-edge) can block every z in one direction, so the scan is
// budgeted at the n+4m forbidden-point count and falls over to the other
// legal anchor lines, whose sweep planes differ; a widening bidirectional
// scan covers whatever remains.
inline GridPoint draw_edge(DrawState& state, const Graph& g, int edge_index,
                           coord_t z_start, int* rejected = nullptr) {
  const auto [v, w] = g.edges[edge_index];
  const auto& pos = state.placement->positions;
  const auto anchors = detail::anchor_candidates(pos[v], pos[w]);
  // rules (1)-(3) forbid fewer than n+4m candidates per line,
  // so bends found in the budgeted pass keep z within max(Z, n+4m) of z_start
  coord_t z_top = z_start;
  for (const auto& p : pos) z_top = std::max(z_top, p.z);
  const coord_t budget =
      std::max(z_top - z_start + 1, g.n + 4 * coord_t{g.m()}) - 1;
  int rej = 0;

  const auto accept = [&](const GridPoint& bend) {
    state.segments.push_back({pos[v], bend});
    state.segment_owner.push_back(edge_index);
    state.segments.push_back({pos[w], bend});
    state.segment_owner.push_back(edge_index);
    if (rejected) *rejected = rej;
  };

  for (const Anchor& anchor : anchors) {
    for (coord_t z = z_start; z <= z_start + budget; ++z) {
      const GridPoint bend{anchor.x, anchor.y, z};
      if (is_bend_feasible(state, g, v, w, bend)) {
        accept(bend);
        return bend;
      }
      ++rej;
    }
  }
  for (coord_t r = 1; r <= kCoordBound; ++r) {
    for (const Anchor& anchor : detail::anchor_extension(pos[v], pos[w], r)) {
      for (coord_t z = z_start; z <= z_start + budget; ++z) {
        const GridPoint bend{anchor.x, anchor.y, z};
        if (is_bend_feasible(state, g, v, w, bend)) {
          accept(bend);
          return bend;
        }
        ++rej;
      }
    }
    for (const Anchor& anchor : anchors) {
      for (coord_t z : {z_start + budget + r, z_start - r}) {
        const GridPoint bend{anchor.x, anchor.y, z};
        if (std::abs(z) <= kCoordBound &&
            is_bend_feasible(state, g, v, w, bend)) {
          accept(bend);
          return bend;
        }
        ++rej;
      }
    }
  }
  throw std::runtime_error("draw_edge: no feasible bend within coordinate bounds");
}

namespace detail {

// Stable shuffle independent of std::shuffle's unspecified draw sequence.
inline std::vector<int> edge_order(int m, const DrawOptions& opts) {
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (opts.order == EdgeOrder::Random) {
    std::mt19937_64 rng(opts.seed);
    for (int i = m - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(order[i], order[j]);
    }
  }
  return order;
}

}  // namespace detail

inline DrawResult draw_graph(const Graph& g, const Placement& pl,
                             const DrawOptions& opts = {}) {
  validate_graph(g);
  validate_placement(g, pl);

  coord_t z_start = 0;
  if (opts.z_start) {
    z_start = *opts.z_start;
  } else if (g.n > 0) {
    z_start = std::numeric_limits<coord_t>::max();
    for (const auto& p : pl.positions) z_start = std::min(z_start, p.z);
  }

  DrawState state;
  state.placement = &pl;

  DrawResult res;
  res.drawing.graph = g;
  res.drawing.placement = pl;
  res.drawing.bends.resize(g.edges.size());
  res.order = detail::edge_order(g.m(), opts);

  for (int ei : res.order) {
    int rej = 0;
    res.drawing.bends[ei] = draw_edge(state, g, ei, z_start, &rej);
    res.stats.push_back({ei, res.drawing.bends[ei].z, rej});
  }

  if (opts.bound_check && g.n > 0) {
    GridPoint lo = pl.positions[0], hi = pl.positions[0];
    for (const auto& p : pl.positions) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    const coord_t Z = hi.z - lo.z + 1;
    const coord_t z_cap =
        z_start + std::max<coord_t>(Z, g.n + 4 * coord_t{g.m()}) - 1;
    for (std::size_t i = 0; i < res.drawing.bends.size(); ++i) {
      const auto& b = res.drawing.bends[i];
      if (b.x < lo.x - 1 || b.x > hi.x + 1 || b.y < lo.y - 1 ||
          b.y > hi.y + 1 || b.z < z_start || b.z > z_cap) {
        res.bound_violations.push_back(static_cast<int>(i));
      }
    }
  }
  return res;
}

}  // namespace gridbend
