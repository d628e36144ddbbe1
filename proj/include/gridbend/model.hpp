#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gridbend/geometry.hpp"

namespace gridbend {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;  // canonical: first < second

struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  int m() const { return static_cast<int>(edges.size()); }
};

struct Placement {
  std::vector<GridPoint> positions;  // indexed by vertex
};

struct PolylineEdge {
  Edge edge;
  GridPoint bend;
};

struct Drawing {
  Graph graph;
  Placement placement;
  std::vector<GridPoint> bends;  // bends[i] belongs to graph.edges[i]
};

namespace detail {

struct PointHash {
  std::size_t operator()(const GridPoint& p) const {
    std::size_t h = std::hash<coord_t>{}(p.x);
    h = h * 1000003u ^ std::hash<coord_t>{}(p.y);
    h = h * 1000003u ^ std::hash<coord_t>{}(p.z);
    return h;
  }
};

}  // namespace detail

inline void validate_graph(const Graph& g) {
  if (g.n < 0) throw ValidationError("graph: negative vertex count");
  std::unordered_set<long long> seen;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto [u, v] = g.edges[i];
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
      throw ValidationError("graph: edge " + std::to_string(i) +
                            " has vertex index out of range");
    }
    if (u == v) {
      throw ValidationError("graph: edge " + std::to_string(i) +
                            " is a self-loop at vertex " + std::to_string(u));
    }
    if (u > v) {
      throw ValidationError("graph: edge " + std::to_string(i) +
                            " not in canonical (min,max) order");
    }
    if (!seen.insert(static_cast<long long>(u) * g.n + v).second) {
      throw ValidationError("graph: duplicate edge (" + std::to_string(u) +
                            "," + std::to_string(v) + ")");
    }
  }
}

inline void validate_placement(const Graph& g, const Placement& pl) {
  if (static_cast<int>(pl.positions.size()) != g.n) {
    throw ValidationError("placement: expected " + std::to_string(g.n) +
                          " positions, got " +
                          std::to_string(pl.positions.size()));
  }
  std::unordered_set<GridPoint, detail::PointHash> seen;
  for (int v = 0; v < g.n; ++v) {
    const auto& p = pl.positions[v];
    if (std::abs(p.x) > kCoordBound || std::abs(p.y) > kCoordBound ||
        std::abs(p.z) > kCoordBound) {
      throw ValidationError("placement: vertex " + std::to_string(v) +
                            " coordinate exceeds 2^20");
    }
    if (!seen.insert(p).second) {
      throw ValidationError("placement: duplicate position at vertex " +
                            std::to_string(v));
    }
  }
}

inline void validate_drawing(const Drawing& d) {
  validate_graph(d.graph);
  validate_placement(d.graph, d.placement);
  if (d.bends.size() != d.graph.edges.size()) {
    throw ValidationError("drawing: bend count " +
                          std::to_string(d.bends.size()) +
                          " does not match edge count " +
                          std::to_string(d.graph.edges.size()));
  }
  for (std::size_t i = 0; i < d.bends.size(); ++i) {
    const auto& b = d.bends[i];
    if (std::abs(b.x) > kCoordBound || std::abs(b.y) > kCoordBound ||
        std::abs(b.z) > kCoordBound) {
      throw ValidationError("drawing: bend " + std::to_string(i) +
                            " coordinate exceeds 2^20");
    }
  }
}

}  // namespace gridbend
