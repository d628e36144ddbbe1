#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gridbend/geometry.hpp"
#include "oracle.hpp"

using namespace gridbend;

namespace {

GridPoint rand_point(std::mt19937_64& rng, coord_t lo, coord_t hi) {
  std::uniform_int_distribution<coord_t> d(lo, hi);
  return {d(rng), d(rng), d(rng)};
}

Segment rand_segment(std::mt19937_64& rng, coord_t lo, coord_t hi) {
  Segment s{rand_point(rng, lo, hi), rand_point(rng, lo, hi)};
  while (s.p == s.q) s.q = rand_point(rng, lo, hi);
  return s;
}

bool same_result(const SegmentIntersection& a, const SegmentIntersection& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != IntersectionKind::Point) return true;
  if (a.at_grid_point != b.at_grid_point) return false;
  return !a.at_grid_point || a.point == b.point;
}

}  // namespace

TEST_CASE("collinear") {
  CHECK(collinear({0, 0, 0}, {1, 1, 1}, {2, 2, 2}));
  CHECK_FALSE(collinear({0, 0, 0}, {1, 0, 0}, {0, 1, 0}));
  CHECK(collinear({0, 0, 0}, {2, 4, 6}, {3, 6, 9}));
}

TEST_CASE("point_on_segment") {
  const Segment diag{{0, 0, 0}, {2, 2, 2}};
  CHECK(point_on_segment({1, 1, 1}, diag, false));
  CHECK_FALSE(point_on_segment({0, 0, 0}, diag, false));
  CHECK(point_on_segment({0, 0, 0}, diag, true));
  CHECK_FALSE(point_on_segment({1, 1, 0}, diag, false));
  CHECK_FALSE(point_on_segment({1, 1, 0}, diag, true));
  CHECK_FALSE(point_on_segment({3, 3, 3}, diag, true));
}

TEST_CASE("segments_intersect classification") {
  SUBCASE("shared endpoint") {
    const auto r = segments_intersect({{0, 0, 0}, {1, 1, 1}},
                                      {{1, 1, 1}, {2, 0, 0}});
    CHECK(r.kind == IntersectionKind::Point);
    CHECK(r.at_grid_point);
    CHECK(r.point == GridPoint{1, 1, 1});
  }
  SUBCASE("proper crossing at a grid point") {
    const auto r = segments_intersect({{0, 0, 0}, {4, 2, 2}},
                                      {{4, 0, 0}, {0, 2, 2}});
    CHECK(r.kind == IntersectionKind::Point);
    CHECK(r.at_grid_point);
    CHECK(r.point == GridPoint{2, 1, 1});
  }
  SUBCASE("collinear with shared stretch") {
    const auto r = segments_intersect({{0, 0, 0}, {3, 3, 3}},
                                      {{2, 2, 2}, {5, 5, 5}});
    CHECK(r.kind == IntersectionKind::Overlap);
  }
  SUBCASE("parallel translate") {
    const auto r = segments_intersect({{0, 0, 0}, {2, 2, 2}},
                                      {{0, 0, 1}, {2, 2, 3}});
    CHECK(r.kind == IntersectionKind::Disjoint);
  }
  SUBCASE("crossing at a non-integer point") {
    // midpoints meet at (1/2, 1/2, 0)
    const auto r = segments_intersect({{0, 0, 0}, {1, 1, 0}},
                                      {{1, 0, 0}, {0, 1, 0}});
    CHECK(r.kind == IntersectionKind::Point);
    CHECK_FALSE(r.at_grid_point);
  }
  SUBCASE("skew lines") {
    const auto r = segments_intersect({{0, 0, 0}, {1, 0, 0}},
                                      {{0, 1, 1}, {0, -1, 1}});
    CHECK(r.kind == IntersectionKind::Disjoint);
  }
  SUBCASE("degenerate input rejected") {
    CHECK_THROWS_AS(segments_intersect({{0, 0, 0}, {0, 0, 0}},
                                       {{1, 0, 0}, {2, 0, 0}}),
                    std::invalid_argument);
  }
  SUBCASE("coordinate bound guarded") {
    const coord_t big = kCoordBound + 1;
    CHECK_THROWS_AS(segments_intersect({{big, 0, 0}, {0, 0, 0}},
                                       {{1, 0, 0}, {2, 0, 0}}),
                    std::invalid_argument);
  }
}

TEST_CASE("interior_lattice_count") {
  CHECK(interior_lattice_count({{0, 0, 0}, {2, 2, 2}}) == 1);
  CHECK(interior_lattice_count({{0, 0, 0}, {1, 5, 7}}) == 0);
  CHECK(interior_lattice_count({{0, 0, 0}, {4, 6, 2}}) == 1);
  CHECK(interior_lattice_count({{0, 0, 0}, {0, 0, 6}}) == 5);
}

TEST_CASE("intersection invariances") {
  std::mt19937_64 rng(1234);
  for (int it = 0; it < 20000; ++it) {
    const Segment a = rand_segment(rng, -6, 6);
    const Segment b = rand_segment(rng, -6, 6);
    const auto r = segments_intersect(a, b);

    // symmetry
    CHECK(same_result(r, segments_intersect(b, a)));
    // endpoint-order invariance
    CHECK(same_result(r, segments_intersect({a.q, a.p}, b)));
    CHECK(same_result(r, segments_intersect(a, {b.q, b.p})));
    // translation invariance
    const GridPoint t = rand_point(rng, -50, 50);
    const auto rt = segments_intersect({a.p + t, a.q + t}, {b.p + t, b.q + t});
    CHECK(rt.kind == r.kind);
    if (r.kind == IntersectionKind::Point) {
      CHECK(rt.at_grid_point == r.at_grid_point);
      if (r.at_grid_point) CHECK(rt.point == r.point + t);
    }
  }
}

TEST_CASE("oracle equivalence on random pairs") {
  std::mt19937_64 rng(99);
  int disagreements = 0;
  for (int it = 0; it < 100000; ++it) {
    const Segment a = rand_segment(rng, -6, 6);
    const Segment b = rand_segment(rng, -6, 6);
    disagreements += !same_result(segments_intersect(a, b),
                                  oracle::intersect(a, b));
  }
  CHECK(disagreements == 0);
}

TEST_CASE("lattice count vs exhaustive box scan") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 2000; ++it) {
    const Segment s = rand_segment(rng, -12, 12);
    long long brute = 0;
    for (auto x = std::min(s.p.x, s.q.x); x <= std::max(s.p.x, s.q.x); ++x)
      for (auto y = std::min(s.p.y, s.q.y); y <= std::max(s.p.y, s.q.y); ++y)
        for (auto z = std::min(s.p.z, s.q.z); z <= std::max(s.p.z, s.q.z); ++z)
          brute += point_on_segment({x, y, z}, s, false);
    CHECK(interior_lattice_count(s) == brute);
  }
}

TEST_CASE("unit step forces empty interior") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 5000; ++it) {
    Segment s = rand_segment(rng, -40, 40);
    s.q.x = s.p.x + 1;  // |dx| = 1
    CHECK(interior_lattice_count(s) == 0);
  }
}
