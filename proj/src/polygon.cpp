#include "polygon.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace hfl {

Polygon Polygon::scaled(const Rat& f) const {
  Polygon out;
  out.vertices.reserve(vertices.size());
  for (const auto& v : vertices) out.vertices.push_back({v.x * f, v.y * f});
  if (f < Rat(0)) {
    // keep CCW order
    out = convex_hull(out.vertices);
  }
  return out;
}

Polygon Polygon::negated() const { return scaled(Rat(-1)); }

Rat Polygon::support(const Rat& hx, const Rat& hy) const {
  if (vertices.empty()) fail(Err::EmptyPolytope, "support function of empty polygon");
  Rat best = dot(vertices[0], hx, hy);
  for (std::size_t i = 1; i < vertices.size(); ++i) best = std::max(best, dot(vertices[i], hx, hy));
  return best;
}

bool Polygon::contains(const RatPoint& p) const {
  if (vertices.empty()) return false;
  if (vertices.size() == 1) return vertices[0] == p;
  if (vertices.size() == 2) {
    if (cross(vertices[0], vertices[1], p) != Rat(0)) return false;
    Rat lo_x = std::min(vertices[0].x, vertices[1].x), hi_x = std::max(vertices[0].x, vertices[1].x);
    Rat lo_y = std::min(vertices[0].y, vertices[1].y), hi_y = std::max(vertices[0].y, vertices[1].y);
    return lo_x <= p.x && p.x <= hi_x && lo_y <= p.y && p.y <= hi_y;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % vertices.size()];
    if (cross(a, b, p) < Rat(0)) return false;
  }
  return true;
}

bool Polygon::contains(const Polygon& other) const {
  return std::all_of(other.vertices.begin(), other.vertices.end(),
                     [this](const RatPoint& p) { return contains(p); });
}

bool Polygon::centrally_symmetric() const {
  Polygon neg = negated();
  auto sorted = [](std::vector<RatPoint> v) {
    std::sort(v.begin(), v.end(), rat_point_less);
    return v;
  };
  return sorted(vertices) == sorted(neg.vertices);
}

Polygon convex_hull(std::vector<RatPoint> points) {
  std::sort(points.begin(), points.end(), rat_point_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Polygon out;
  if (points.size() <= 2) {
    out.vertices = std::move(points);
    return out;
  }
  std::vector<RatPoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= Rat(0)) --k;
    hull[k++] = p;
  }
  const std::size_t lower_end = k + 1;
  for (auto it = points.rbegin() + 1, last = points.rend(); it != last; ++it) {  // upper chain
    while (k >= lower_end && cross(hull[k - 2], hull[k - 1], *it) <= Rat(0)) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  out.vertices = std::move(hull);
  if (out.vertices.size() == 2 && !rat_point_less(out.vertices[0], out.vertices[1]))
    std::swap(out.vertices[0], out.vertices[1]);
  return out;
}

namespace {

std::optional<RatPoint> line_intersection(const HalfPlane& p, const HalfPlane& q) {
  Rat det = p.a * q.b - p.b * q.a;
  if (det == Rat(0)) return std::nullopt;
  return RatPoint{(p.c * q.b - p.b * q.c) / det, (p.a * q.c - p.c * q.a) / det};
}

bool satisfies_all(const RatPoint& u, const std::vector<HalfPlane>& planes) {
  for (const auto& h : planes)
    if (h.a * u.x + h.b * u.y > h.c) return false;
  return true;
}

}  // namespace

Polygon intersect_half_planes(const std::vector<HalfPlane>& planes) {
  // Candidate vertices are pairwise boundary intersections. Quadratic in the
  // plane count, which stays tiny here (edge normals of one hull plus axes).
  std::vector<RatPoint> candidates;
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j)
      if (auto u = line_intersection(planes[i], planes[j]); u && satisfies_all(*u, planes))
        candidates.push_back(*u);
  return convex_hull(std::move(candidates));
}

std::vector<std::pair<std::int64_t, std::int64_t>> edge_normals(const Polygon& poly) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const auto& v = poly.vertices;
  if (v.size() < 2) return out;
  auto push_primitive = [&out](Rat dx, Rat dy) {
    // outward normal of CCW edge direction (dx, dy) is (dy, -dx)
    std::int64_t nx_num = dy.numerator() * dx.denominator();
    std::int64_t ny_num = -dx.numerator() * dy.denominator();
    std::int64_t g = std::gcd(std::abs(nx_num), std::abs(ny_num));
    if (g == 0) return;
    out.emplace_back(nx_num / g, ny_num / g);
  };
  if (v.size() == 2) {
    push_primitive(v[1].x - v[0].x, v[1].y - v[0].y);
    push_primitive(v[0].x - v[1].x, v[0].y - v[1].y);
    return out;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    push_primitive(b.x - a.x, b.y - a.y);
  }
  return out;
}

}  // namespace hfl
