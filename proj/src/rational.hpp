#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "halfint.hpp"

namespace hfl {

using Rat = boost::rational<std::int64_t>;

inline Rat rat_of(HalfInt h) { return Rat(h.doubled(), 2); }
inline Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

// Canonical rendering: integers plain, otherwise "p/q" with q > 0.
inline std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct RatPoint {
  Rat x, y;
  friend bool operator==(const RatPoint&, const RatPoint&) = default;
  RatPoint operator-() const { return {-x, -y}; }
};

inline bool rat_point_less(const RatPoint& a, const RatPoint& b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

// Twice the signed area of the triangle (a, b, c); > 0 for a left turn.
inline Rat cross(const RatPoint& a, const RatPoint& b, const RatPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Rat dot(const RatPoint& p, const Rat& hx, const Rat& hy) { return p.x * hx + p.y * hy; }

}  // namespace hfl
