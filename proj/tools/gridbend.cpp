// gridbend — one-bend 3D grid drawings with fixed vertex locations.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 input/usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gridbend/analysis.hpp"
#include "gridbend/drawer.hpp"
#include "gridbend/generate.hpp"
#include "gridbend/io.hpp"
#include "gridbend/model.hpp"
#include "gridbend/verifier.hpp"

namespace gb = gridbend;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

gb::Placement parse_placement_flag(const std::string& spec, int n,
                                   std::uint64_t seed) {
  if (spec == "line") return gb::line_placement(n);
  if (spec.rfind("box:", 0) == 0) {
    long long X, Y, Z;
    if (std::sscanf(spec.c_str() + 4, "%lld,%lld,%lld", &X, &Y, &Z) != 3) {
      throw UsageError("--placement box wants box:X,Y,Z");
    }
    return gb::box_placement(n, X, Y, Z, seed);
  }
  throw UsageError("--placement must be line or box:X,Y,Z");
}

gb::DrawOptions parse_order_flag(const std::string& spec) {
  gb::DrawOptions opts;
  if (spec == "input") return opts;
  if (spec.rfind("random:", 0) == 0) {
    opts.order = gb::EdgeOrder::Random;
    opts.seed = std::stoull(spec.substr(7));
    return opts;
  }
  throw UsageError("--order must be input or random:SEED");
}

int run_gen(const std::string& family, int n, int m,
            const std::string& placement, std::uint64_t seed,
            const std::string& out_graph, const std::string& out_placement) {
  gb::Graph g;
  if (family == "complete") {
    g = gb::complete_graph(n);
  } else if (family == "path") {
    g = gb::path_graph(n);
  } else if (family == "gnm") {
    if (m < 0) throw UsageError("gen gnm requires --m");
    g = gb::gnm_graph(n, m, seed);
  } else {
    throw UsageError("--family must be complete, gnm, or path");
  }
  gb::Placement pl = parse_placement_flag(placement, n, seed);
  gb::save_instance(g, pl, out_graph, out_placement);
  return 0;
}

int run_draw(const std::string& graph_file, const std::string& placement_file,
             const std::string& order, std::optional<long long> z_start,
             bool bound_check, const std::string& out,
             const std::string& stats_file) {
  auto [g, pl] = gb::load_instance(graph_file, placement_file);
  gb::DrawOptions opts = parse_order_flag(order);
  if (z_start) opts.z_start = *z_start;
  opts.bound_check = bound_check;

  const auto t0 = std::chrono::steady_clock::now();
  const gb::DrawResult res = gb::draw_graph(g, pl, opts);
  const auto t1 = std::chrono::steady_clock::now();

  gb::save_drawing(res.drawing, out);

  if (!res.bound_violations.empty()) {
    std::cerr << "bound-check: " << res.bound_violations.size()
              << " bend(s) outside the expected box\n";
  }
  if (!stats_file.empty()) {
    json stats;
    stats["order"] = res.order;
    json per_edge = json::array();
    for (const auto& s : res.stats) {
      const auto [u, v] = g.edges[s.edge_index];
      per_edge.push_back({{"edge", s.edge_index},
                          {"u", u},
                          {"v", v},
                          {"z", s.z},
                          {"rejected", s.rejected}});
    }
    stats["edges"] = per_edge;
    stats["bound_violations"] = res.bound_violations;
    stats["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    gb::detail::write_json(stats, stats_file);
  }
  return 0;
}

int run_verify(const std::string& drawing_file, const std::string& report_file) {
  const gb::Drawing d = gb::load_drawing(drawing_file);
  const gb::VerificationReport rep = gb::verify(d);
  if (!report_file.empty()) {
    json j;
    j["pass"] = rep.pass();
    json viols = json::array();
    for (const auto& v : rep.violations) {
      json jv;
      jv["kind"] = gb::to_string(v.kind);
      jv["edges"] = v.edges;
      jv["vertices"] = v.vertices;
      if (v.where) jv["point"] = {v.where->x, v.where->y, v.where->z};
      viols.push_back(jv);
    }
    j["violations"] = viols;
    gb::detail::write_json(j, report_file);
  }
  for (const auto& v : rep.violations) {
    std::cerr << v.describe() << '\n';
  }
  std::cout << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.violations.size()
            << " violation(s))\n";
  return rep.pass() ? 0 : 1;
}

int run_analyze(const std::string& drawing_file, const std::string& report_file,
                bool brute_cutwidth) {
  const gb::Drawing d = gb::load_drawing(drawing_file);
  const gb::BoundingBox box = gb::bounding_box(d);

  // Vertex box dims feed the upper-bound formula.
  gb::Drawing verts_only{d.graph, d.placement, {}};
  verts_only.graph.edges.clear();
  verts_only.bends.clear();
  const gb::BoundingBox vbox = gb::bounding_box(verts_only);

  const long long n = d.graph.n;
  const long long m = d.graph.m();
  const bool is_complete = (m == n * (n - 1) / 2);
  const bool collinear_input = gb::placement_collinear(d.placement);

  json j;
  j["achieved_volume"] = box.volume();
  j["upper_bound_volume"] = gb::upper_bound_volume(
      n, m, vbox.dim_x(), vbox.dim_y(), vbox.dim_z());
  j["collinear_input"] = collinear_input;

  std::optional<long long> cutwidth;
  std::string method = "none";
  if (is_complete && n >= 1) {
    cutwidth = gb::cutwidth_complete(n);
    method = "formula";
  } else if (n <= 9) {
    cutwidth = gb::cutwidth_bruteforce(d.graph);
    method = "bruteforce";
  }
  bool cross_checked = false;
  if (brute_cutwidth && n <= 9) {
    const long long bf = gb::cutwidth_bruteforce(d.graph);
    if (cutwidth && bf != *cutwidth) {
      throw std::logic_error("cutwidth cross-check mismatch");
    }
    cutwidth = bf;
    cross_checked = true;
  }
  if (cutwidth) {
    j["cutwidth"] = {{"value", *cutwidth},
                     {"method", method},
                     {"bruteforce_checked", cross_checked}};
    const gb::Rational lb = gb::line_lower_bound(n, *cutwidth);
    j["cutwidth_lower_bound"] = {{"num", lb.num}, {"den", lb.den}};
  } else {
    j["cutwidth"] = nullptr;
    j["cutwidth_lower_bound"] = nullptr;
  }
  j["lower_bound_applies"] = collinear_input;

  const std::string text = j.dump(2);
  if (!report_file.empty()) {
    std::ofstream out(report_file);
    out << text << '\n';
  }
  std::cout << text << '\n';
  return 0;
}

int run_export(const std::string& drawing_file, const std::string& format,
               const std::string& out) {
  if (format != "obj") throw UsageError("--format must be obj");
  const gb::Drawing d = gb::load_drawing(drawing_file);
  std::ofstream os(out);
  if (!os) throw std::runtime_error("cannot write " + out);
  os << "# gridbend one-bend drawing: " << d.graph.n << " vertices, "
     << d.graph.m() << " edges\n";
  for (const auto& p : d.placement.positions) {
    os << "v " << p.x << ' ' << p.y << ' ' << p.z << '\n';
  }
  for (const auto& b : d.bends) {
    os << "v " << b.x << ' ' << b.y << ' ' << b.z << '\n';
  }
  // OBJ indices are 1-based; bends follow the n vertex records.
  for (int i = 0; i < d.graph.m(); ++i) {
    const auto [u, v] = d.graph.edges[i];
    const int bend_idx = d.graph.n + i + 1;
    os << "l " << u + 1 << ' ' << bend_idx << '\n';
    os << "l " << bend_idx << ' ' << v + 1 << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-bend 3D grid drawings with fixed vertex locations"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph + placement instance");
  std::string family, placement = "line";
  int n = 0, m = -1;
  std::uint64_t seed = 0;
  std::string out_graph, out_placement;
  gen->add_option("--family", family, "complete|gnm|path")->required();
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--m", m, "edge count (gnm only)");
  gen->add_option("--placement", placement, "line|box:X,Y,Z");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--out-graph", out_graph)->required();
  gen->add_option("--out-placement", out_placement)->required();

  // draw
  auto* draw = app.add_subcommand("draw", "route all edges with one bend each");
  std::string graph_file, placement_file, order = "input", out, stats_file;
  std::optional<long long> z_start;
  bool bound_check = false;
  draw->add_option("--graph", graph_file)->required();
  draw->add_option("--placement", placement_file)->required();
  draw->add_option("--order", order, "input|random:SEED");
  draw->add_option("--z-start", z_start, "first z to try (default: min vertex z)");
  draw->add_flag("--bound-check", bound_check,
                 "report bends outside the expected box");
  draw->add_option("--out", out)->required();
  draw->add_option("--stats", stats_file, "per-edge diagnostics JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "check a drawing for violations");
  std::string drawing_file, report_file;
  verify->add_option("--drawing", drawing_file)->required();
  verify->add_option("--report", report_file);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "volume and cutwidth bounds");
  std::string an_drawing, an_report;
  bool brute_cutwidth = false;
  analyze->add_option("--drawing", an_drawing)->required();
  analyze->add_option("--report", an_report);
  analyze->add_flag("--brute-cutwidth", brute_cutwidth,
                    "cross-check cutwidth by exhaustive orderings (n <= 9)");

  // export
  auto* exp = app.add_subcommand("export", "write drawing geometry for viewers");
  std::string ex_drawing, ex_format = "obj", ex_out;
  exp->add_option("--drawing", ex_drawing)->required();
  exp->add_option("--format", ex_format, "obj");
  exp->add_option("--out", ex_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help is success; bad usage is 2
  }

  try {
    if (gen->parsed()) {
      return run_gen(family, n, m, placement, seed, out_graph, out_placement);
    }
    if (draw->parsed()) {
      return run_draw(graph_file, placement_file, order, z_start, bound_check,
                      out, stats_file);
    }
    if (verify->parsed()) return run_verify(drawing_file, report_file);
    if (analyze->parsed()) return run_analyze(an_drawing, an_report,
                                              brute_cutwidth);
    if (exp->parsed()) return run_export(ex_drawing, ex_format, ex_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
