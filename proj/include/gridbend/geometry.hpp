#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

// Exact integer predicates on points and segments in Z^3.
// All decisions are made with integer arithmetic; intermediates use 128-bit
// signed values, which is why inputs are capped at |coord| <= 2^20.

namespace gridbend {

using coord_t = std::int64_t;
using wide_t = __int128;

inline constexpr coord_t kCoordBound = coord_t{1} << 20;

struct GridPoint {
  coord_t x = 0;
  coord_t y = 0;
  coord_t z = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;

  friend GridPoint operator+(const GridPoint& a, const GridPoint& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend GridPoint operator-(const GridPoint& a, const GridPoint& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
};

struct Segment {
  GridPoint p;
  GridPoint q;
};

enum class IntersectionKind { Disjoint, Point, Overlap };

struct SegmentIntersection {
  IntersectionKind kind = IntersectionKind::Disjoint;
  // For kind == Point: whether the common point has integer coordinates,
  // and the point itself when it does.
  bool at_grid_point = false;
  GridPoint point{};
};

namespace detail {

inline void check_coord_bound(const GridPoint& p) {
  if (std::abs(p.x) > kCoordBound || std::abs(p.y) > kCoordBound ||
      std::abs(p.z) > kCoordBound) {
    throw std::invalid_argument("geometry: coordinate exceeds 2^20 bound");
  }
}

// Cross product of difference vectors. Components stay below 2^43.
inline GridPoint cross(const GridPoint& u, const GridPoint& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z,
          u.x * v.y - u.y * v.x};
}

inline wide_t dot(const GridPoint& u, const GridPoint& v) {
  return wide_t(u.x) * v.x + wide_t(u.y) * v.y + wide_t(u.z) * v.z;
}

inline bool is_zero(const GridPoint& v) {
  return v.x == 0 && v.y == 0 && v.z == 0;
}

}  // namespace detail

inline bool collinear(const GridPoint& p, const GridPoint& q,
                      const GridPoint& r) {
  return detail::is_zero(detail::cross(q - p, r - p));
}

inline bool point_on_segment(const GridPoint& pt, const Segment& s,
                             bool include_endpoints) {
  if (!collinear(pt, s.p, s.q)) return false;
  const GridPoint d = s.q - s.p;
  const wide_t t = detail::dot(pt - s.p, d);
  const wide_t len2 = detail::dot(d, d);
  return include_endpoints ? (t >= 0 && t <= len2) : (t > 0 && t < len2);
}

// Exact classification of closed-segment intersection over the rationals.
// Endpoint contact counts as Point; collinear segments sharing a stretch of
// positive length are Overlap, never collapsed into Point.
inline SegmentIntersection segments_intersect(const Segment& s1,
                                              const Segment& s2) {
  detail::check_coord_bound(s1.p);
  detail::check_coord_bound(s1.q);
  detail::check_coord_bound(s2.p);
  detail::check_coord_bound(s2.q);
  if (s1.p == s1.q || s2.p == s2.q) {
    throw std::invalid_argument("segments_intersect: degenerate segment");
  }

  const GridPoint d1 = s1.q - s1.p;
  const GridPoint d2 = s2.q - s2.p;
  const GridPoint w = s2.p - s1.p;
  const GridPoint c = detail::cross(d1, d2);

  if (detail::is_zero(c)) {
    // Parallel lines.
    if (!detail::is_zero(detail::cross(w, d1))) return {};
    // Same line: compare parameter intervals along d1.
    const wide_t len2 = detail::dot(d1, d1);
    const wide_t a = detail::dot(w, d1);
    const wide_t b = detail::dot(w + d2, d1);
    const wide_t lo = std::max<wide_t>(0, std::min(a, b));
    const wide_t hi = std::min<wide_t>(len2, std::max(a, b));
    if (lo > hi) return {};
    if (lo < hi) return {IntersectionKind::Overlap, false, {}};
    // Single shared point; it is an endpoint of one of the segments.
    GridPoint pt;
    if (lo == 0) {
      pt = s1.p;
    } else if (lo == len2) {
      pt = s1.q;
    } else {
      pt = (lo == a) ? s2.p : s2.q;
    }
    return {IntersectionKind::Point, true, pt};
  }

  // Skew test: the lines meet iff w, d1, d2 are coplanar.
  if (detail::dot(w, c) != 0) return {};

  // Coplanar, non-parallel: the lines meet at parameters
  //   s = sn/cc along s1,  t = tn/cc along s2,  with cc > 0.
  const wide_t cc = detail::dot(c, c);
  const wide_t sn = detail::dot(detail::cross(w, d2), c);
  const wide_t tn = detail::dot(detail::cross(w, d1), c);
  if (sn < 0 || sn > cc || tn < 0 || tn > cc) return {};

  const wide_t nx = sn * d1.x;
  const wide_t ny = sn * d1.y;
  const wide_t nz = sn * d1.z;
  const bool integral = (nx % cc == 0) && (ny % cc == 0) && (nz % cc == 0);
  GridPoint pt{};
  if (integral) {
    pt = {s1.p.x + coord_t(nx / cc), s1.p.y + coord_t(ny / cc),
          s1.p.z + coord_t(nz / cc)};
  }
  return {IntersectionKind::Point, integral, pt};
}

/// Number of grid points strictly interior to s: gcd(|dx|,|dy|,|dz|) - 1.
inline std::int64_t interior_lattice_count(const Segment& s) {
  if (s.p == s.q) {
    throw std::invalid_argument("interior_lattice_count: degenerate segment");
  }
  const GridPoint d = s.q - s.p;
  const auto g = std::gcd(std::gcd(std::abs(d.x), std::abs(d.y)),
                          std::abs(d.z));
  return g - 1;
}

}  // namespace gridbend
