#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gridbend/geometry.hpp"
#include "gridbend/model.hpp"

// Post-hoc validity checker for one-bend drawings: brute force over all
// segment pairs and all vertex/segment pairs. Shares only the geometry
// kernel with the drawer, none of its incremental feasibility logic.

namespace gridbend {

enum class ViolationKind {
  DuplicatePosition,
  DegenerateSegment,
  BendOnVertex,
  SegmentThroughVertex,
  SelfOverlap,
  EdgePairIntersection,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DuplicatePosition: return "DuplicatePosition";
    case ViolationKind::DegenerateSegment: return "DegenerateSegment";
    case ViolationKind::BendOnVertex: return "BendOnVertex";
    case ViolationKind::SegmentThroughVertex: return "SegmentThroughVertex";
    case ViolationKind::SelfOverlap: return "SelfOverlap";
    case ViolationKind::EdgePairIntersection: return "EdgePairIntersection";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::vector<int> edges;     // offending edge indices
  std::vector<int> vertices;  // offending vertex ids
  std::optional<GridPoint> where;

  std::string describe() const {
    std::ostringstream os;
    os << to_string(kind);
    if (!edges.empty()) {
      os << " edges[";
      for (std::size_t i = 0; i < edges.size(); ++i) {
        os << (i ? "," : "") << edges[i];
      }
      os << "]";
    }
    if (!vertices.empty()) {
      os << " vertices[";
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        os << (i ? "," : "") << vertices[i];
      }
      os << "]";
    }
    if (where) {
      os << " at (" << where->x << "," << where->y << "," << where->z << ")";
    }
    return os.str();
  }
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
  int count(ViolationKind k) const {
    int c = 0;
    for (const auto& v : violations) c += (v.kind == k);
    return c;
  }
};

inline VerificationReport verify(const Drawing& d) {
  VerificationReport rep;
  const auto& pos = d.placement.positions;
  const auto& edges = d.graph.edges;
  const int m = d.graph.m();

  for (int u = 0; u < d.graph.n; ++u) {
    for (int v = u + 1; v < d.graph.n; ++v) {
      if (pos[u] == pos[v]) {
        rep.violations.push_back(
            {ViolationKind::DuplicatePosition, {}, {u, v}, pos[u]});
      }
    }
  }

  // Per-edge structural checks; edges with a degenerate half are excluded
  // from the segment-level passes below.
  std::vector<bool> degenerate(m, false);
  for (int i = 0; i < m; ++i) {
    const auto [u, v] = edges[i];
    if (d.bends[i] == pos[u] || d.bends[i] == pos[v]) {
      degenerate[i] = true;
      rep.violations.push_back(
          {ViolationKind::DegenerateSegment, {i}, {}, d.bends[i]});
    }
    for (int x = 0; x < d.graph.n; ++x) {
      if (d.bends[i] == pos[x]) {
        rep.violations.push_back(
            {ViolationKind::BendOnVertex, {i}, {x}, d.bends[i]});
        break;
      }
    }
  }

  const auto edge_segments = [&](int i) {
    const auto [u, v] = edges[i];
    return std::array<Segment, 2>{Segment{pos[u], d.bends[i]},
                                  Segment{pos[v], d.bends[i]}};
  };

  for (int i = 0; i < m; ++i) {
    if (degenerate[i]) continue;
    const auto segs = edge_segments(i);

    for (const auto& s : segs) {
      for (int x = 0; x < d.graph.n; ++x) {
        if (point_on_segment(pos[x], s, /*include_endpoints=*/false)) {
          rep.violations.push_back(
              {ViolationKind::SegmentThroughVertex, {i}, {x}, pos[x]});
        }
      }
    }

    // The two halves of one edge must meet exactly at the bend.
    const auto self = segments_intersect(segs[0], segs[1]);
    if (self.kind != IntersectionKind::Point || !self.at_grid_point ||
        !(self.point == d.bends[i])) {
      rep.violations.push_back({ViolationKind::SelfOverlap, {i}, {}, {}});
    }
  }

  // O(m^2) pairwise pass. Contact at a shared graph vertex is the only
  // excused intersection; Overlap is never excused.
  for (int i = 0; i < m; ++i) {
    if (degenerate[i]) continue;
    const auto si = edge_segments(i);
    for (int j = i + 1; j < m; ++j) {
      if (degenerate[j]) continue;
      const auto sj = edge_segments(j);
      std::vector<int> shared;
      for (int a : {edges[i].first, edges[i].second}) {
        if (a == edges[j].first || a == edges[j].second) shared.push_back(a);
      }
      for (const auto& sa : si) {
        for (const auto& sb : sj) {
          const auto r = segments_intersect(sa, sb);
          if (r.kind == IntersectionKind::Disjoint) continue;
          bool excused = false;
          if (r.kind == IntersectionKind::Point && r.at_grid_point) {
            for (int s : shared) excused |= (r.point == pos[s]);
          }
          if (!excused) {
            Violation v{ViolationKind::EdgePairIntersection, {i, j}, {}, {}};
            if (r.kind == IntersectionKind::Point && r.at_grid_point) {
              v.where = r.point;
            }
            rep.violations.push_back(std::move(v));
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace gridbend
