#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace hfl {

// Convex polygon with exact rational vertices, CCW, no collinear triples.
// 0, 1 and 2 vertices encode the empty set, a point and a segment.
struct Polygon {
  std::vector<RatPoint> vertices;

  bool empty() const { return vertices.empty(); }
  std::size_t size() const { return vertices.size(); }
  friend bool operator==(const Polygon&, const Polygon&) = default;

  Polygon scaled(const Rat& f) const;
  Polygon negated() const;

  // max over vertices of <v, h>; polygon must be nonempty.
  Rat support(const Rat& hx, const Rat& hy) const;
  bool contains(const RatPoint& p) const;
  bool contains(const Polygon& other) const;
  bool centrally_symmetric() const;
};

// Monotone chain; collinear points are dropped from the vertex list.
Polygon convex_hull(std::vector<RatPoint> points);

struct HalfPlane {
  // <u, (a, b)> <= c
  Rat a, b, c;
};

// Exact intersection of half planes, assumed bounded; degenerate results
// (segment/point/empty) come out as polygons with 2/1/0 vertices.
Polygon intersect_half_planes(const std::vector<HalfPlane>& planes);

// Outward edge normals as primitive integer vectors; for a segment both
// normals of the supporting line, for a point none.
std::vector<std::pair<std::int64_t, std::int64_t>> edge_normals(const Polygon& poly);

}  // namespace hfl
