#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gridbend/analysis.hpp"
#include "gridbend/generate.hpp"

using namespace gridbend;

TEST_CASE("bounding_box") {
  SUBCASE("single vertex") {
    const Drawing d{{1, {}}, {{{5, 5, 5}}}, {}};
    const auto box = bounding_box(d);
    CHECK(box.volume() == 1);
    CHECK(box.min == GridPoint{5, 5, 5});
  }
  SUBCASE("hand-executed K2 drawing") {
    const Graph g{2, {{0, 1}}};
    const Placement pl{{{1, 1, 1}, {2, 2, 2}}};
    const auto d = draw_graph(g, pl).drawing;
    const auto box = bounding_box(d);
    CHECK(box.dim_x() == 3);
    CHECK(box.dim_y() == 3);
    CHECK(box.dim_z() == 2);
    CHECK(box.volume() == 18);
  }
  SUBCASE("translation leaves volume unchanged") {
    std::mt19937_64 rng(3);
    const Graph g = gnm_graph(6, 9, 3);
    const Placement pl = box_placement(6, 5, 5, 5, 3);
    Drawing d = draw_graph(g, pl).drawing;
    const auto v0 = bounding_box(d).volume();
    const GridPoint t{-17, 4, 230};
    for (auto& p : d.placement.positions) p = p + t;
    for (auto& b : d.bends) b = b + t;
    CHECK(bounding_box(d).volume() == v0);
  }
  SUBCASE("empty drawing rejected") {
    CHECK_THROWS_AS(bounding_box(Drawing{}), std::invalid_argument);
  }
}

TEST_CASE("upper_bound_volume") {
  CHECK(upper_bound_volume(4, 6, 4, 1, 1) == 504);
  CHECK(upper_bound_volume(3, 0, 2, 2, 5) == 4 * 4 * 5);  // max picks Z
  CHECK(upper_bound_volume(1, 0, 1, 1, 1) == 9);
}

TEST_CASE("cutwidth") {
  SUBCASE("path P3") { CHECK(cutwidth_bruteforce(path_graph(3)) == 1); }
  SUBCASE("edgeless") { CHECK(cutwidth_bruteforce({4, {}}) == 0); }
  SUBCASE("complete graphs match the closed form") {
    CHECK(cutwidth_bruteforce(complete_graph(4)) == 4);
    CHECK(cutwidth_bruteforce(complete_graph(5)) == 6);
    for (int n = 2; n <= 7; ++n) {
      CHECK(cutwidth_bruteforce(complete_graph(n)) == cutwidth_complete(n));
    }
  }
  SUBCASE("formula values") {
    CHECK(cutwidth_complete(2) == 1);
    CHECK(cutwidth_complete(4) == 4);
    CHECK(cutwidth_complete(7) == 12);
  }
  SUBCASE("size cap") {
    CHECK_THROWS_AS(cutwidth_bruteforce(complete_graph(10)),
                    std::invalid_argument);
  }
}

TEST_CASE("line_lower_bound") {
  CHECK(line_lower_bound(4, 4) == Rational{8, 1});
  CHECK(line_lower_bound(3, 0) == Rational{0, 1});
  CHECK(line_lower_bound(8, 16) == Rational{64, 1});
  CHECK(line_lower_bound(3, 1) == Rational{3, 2});

  // monotone in both arguments
  for (long long n = 1; n < 10; ++n) {
    for (long long k = 0; k < 10; ++k) {
      const auto v = line_lower_bound(n, k);
      CHECK(v.value() <= line_lower_bound(n + 1, k).value());
      CHECK(v.value() <= line_lower_bound(n, k + 1).value());
    }
  }
}

TEST_CASE("placement_collinear") {
  CHECK(placement_collinear(line_placement(5)));
  CHECK(placement_collinear({{{0, 0, 0}, {3, 3, 3}}}));
  CHECK_FALSE(placement_collinear({{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}}));
}

TEST_CASE("kn_line_experiment") {
  SUBCASE("n=4 sandwich") {
    const auto rep = kn_line_experiment(4);
    CHECK(rep.cutwidth_lower_bound == Rational{8, 1});
    CHECK(rep.upper_bound_volume == 504);
    CHECK(rep.achieved_volume >= 8);
    CHECK(rep.achieved_volume <= 504);
    CHECK(rep.collinear_input);
  }
  SUBCASE("n=2") {
    const auto rep = kn_line_experiment(2);
    CHECK(rep.cutwidth_lower_bound == Rational{1, 1});
    CHECK(rep.collinear_input);
  }
  SUBCASE("volume beats n^3/8 through n=12") {
    for (int n = 2; n <= 12; ++n) {
      const auto rep = kn_line_experiment(n);
      CHECK(8 * rep.achieved_volume >= coord_t{n} * n * n);
      CHECK(rep.achieved_volume <= rep.upper_bound_volume);
    }
  }
}

TEST_CASE("volume bound holds for normalized box instances") {
  std::mt19937_64 rng(88);
  for (int it = 0; it < 30; ++it) {
    const int n = 2 + int(rng() % 10);
    const coord_t X = 2 + coord_t(rng() % 6);
    const coord_t Y = 2 + coord_t(rng() % 6);
    const coord_t Z = 2 + coord_t(rng() % 6);
    if (X * Y * Z < n) continue;
    const Graph g = gnm_graph(n, int(rng() % (n * (n - 1) / 2 + 1)), rng());
    const Placement pl = box_placement(n, X, Y, Z, rng());
    DrawOptions opts;
    opts.z_start = 1;
    const auto d = draw_graph(g, pl, opts).drawing;
    CHECK(bounding_box(d).volume() <= upper_bound_volume(n, g.m(), X, Y, Z));
  }
}
