#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "gridbend/model.hpp"

// JSON interchange. All numbers are decimal integers; floats are rejected.
//
//   graph:     {"n": N, "edges": [[u,v], ...]}
//   placement: {"positions": [[x,y,z], ...]}
//   drawing:   {"n":..., "edges":[...], "positions":[...], "bends":[...]}

namespace gridbend {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

inline coord_t as_int(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_integer()) {
    throw ParseError(what + ": expected integer, got " + j.dump());
  }
  return j.get<coord_t>();
}

inline GridPoint as_point(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(what + ": expected [x,y,z]");
  }
  return {as_int(j[0], what), as_int(j[1], what), as_int(j[2], what)};
}

inline Graph graph_from_json(const nlohmann::json& j) {
  Graph g;
  if (!j.contains("n") || !j.contains("edges")) {
    throw ParseError("graph: missing \"n\" or \"edges\"");
  }
  g.n = static_cast<int>(as_int(j["n"], "graph n"));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("graph: edge must be [u,v]");
    }
    int u = static_cast<int>(as_int(e[0], "graph edge"));
    int v = static_cast<int>(as_int(e[1], "graph edge"));
    if (u > v) std::swap(u, v);  // canonicalize unordered pairs
    g.edges.emplace_back(u, v);
  }
  validate_graph(g);
  return g;
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", edges}};
}

inline nlohmann::json points_to_json(const std::vector<GridPoint>& pts) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& p : pts) a.push_back({p.x, p.y, p.z});
  return a;
}

inline void write_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace detail

inline std::pair<Graph, Placement> load_instance(
    const std::string& graph_file, const std::string& placement_file) {
  Graph g = detail::graph_from_json(detail::parse_file(graph_file));
  const auto j = detail::parse_file(placement_file);
  if (!j.contains("positions")) {
    throw ParseError("placement: missing \"positions\"");
  }
  Placement pl;
  for (const auto& p : j["positions"]) {
    pl.positions.push_back(detail::as_point(p, "placement position"));
  }
  validate_placement(g, pl);
  return {std::move(g), std::move(pl)};
}

inline void save_instance(const Graph& g, const Placement& pl,
                          const std::string& graph_file,
                          const std::string& placement_file) {
  detail::write_json(detail::graph_to_json(g), graph_file);
  detail::write_json({{"positions", detail::points_to_json(pl.positions)}},
                     placement_file);
}

inline void save_drawing(const Drawing& d, const std::string& path) {
  validate_drawing(d);
  nlohmann::json j = detail::graph_to_json(d.graph);
  j["positions"] = detail::points_to_json(d.placement.positions);
  j["bends"] = detail::points_to_json(d.bends);
  detail::write_json(j, path);
}

inline Drawing load_drawing(const std::string& path) {
  const auto j = detail::parse_file(path);
  Drawing d;
  d.graph = detail::graph_from_json(j);
  if (!j.contains("positions") || !j.contains("bends")) {
    throw ParseError("drawing: missing \"positions\" or \"bends\"");
  }
  for (const auto& p : j["positions"]) {
    d.placement.positions.push_back(detail::as_point(p, "drawing position"));
  }
  for (const auto& b : j["bends"]) {
    d.bends.push_back(detail::as_point(b, "drawing bend"));
  }
  validate_drawing(d);
  return d;
}

}  // namespace gridbend
