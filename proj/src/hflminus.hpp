#pragma once

#include <cstdint>

#include "gradeddim.hpp"
#include "hfunc.hpp"

namespace hfl {

// h values on the 2x2 square whose upper-right corner is the evaluation
// point: h(s1-1, s2), h(s1, s2), h(s1-1, s2-1), h(s1, s2-1).
struct LocalSquare {
  std::int64_t h_ul, h_ur, h_ll, h_lr;
};

LocalSquare square_at(const HSource& h, LatticePoint p);

// Index of the local behaviour, 1..6, keyed by the four drops.
int classify_square(const LocalSquare& q);

// HFL^- of one square in total gradings: cases 1-3 vanish, case 4 gives
// F[-2h+1], case 5 F[-2h], case 6 F[-2h] + F[-2h-1], with h the upper-right
// value.
GradedDim minus_group(const LocalSquare& q);
std::int64_t euler_minus(const LocalSquare& q);

GradedDim hfl_minus_at(const HSource& h, LatticePoint p);
std::int64_t euler_minus_at(const HSource& h, LatticePoint p);

enum class Flavor { Minus, Hat };

// HFK of an L-space knot at Alexander grading s, from the local h drops.
GradedDim knot_hfk_at(const KnotH& k, std::int64_t s, Flavor flavor);

// Largest s >= 0 with nonzero hat group; 0 for the unknot.
std::int64_t knot_genus(const KnotH& k);

}  // namespace hfl
