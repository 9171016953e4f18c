#pragma once

#include <cstdint>
#include <vector>

#include "hfunc.hpp"
#include "linkdata.hpp"
#include "polygon.hpp"

namespace hfl {

// All lattice points with nonzero hat group, verified finite by an empty
// one-cell border inside the window.
std::vector<LatticePoint> support_hat(const HFunction& h);

// Builds the h-function at increasing margins until the support border is
// empty (one retry), returning both.
std::pair<HFunction, std::vector<LatticePoint>> support_with_retry(const LinkData& link);

// max over the support of |<s, h>|.
Rat y_norm(const std::vector<LatticePoint>& support, const Rat& h1, const Rat& h2);

struct NormReport {
  Rat h1, h2;
  Rat y_value;
  Rat x_value;
};

// Thurston semi-norm via x(PD[h]) = 2y(h) - |h1| - |h2|; rejects links with a
// trivial (split unknot) component and negative results.
NormReport thurston_x(const LinkData& link, const std::vector<LatticePoint>& support, const Rat& h1,
                      const Rat& h2);

// Convex hull of the support.
Polygon floer_polytope(const std::vector<LatticePoint>& support);

// Dual Thurston polytope in Newton-comparable units: support function
// y(h) - (|h1| + |h2|)/2, computed by exact half-plane intersection over the
// edge normals of the doubled support hull plus the axes, then verified.
Polygon dual_thurston_polytope(const LinkData& link, const std::vector<LatticePoint>& support);

enum class NewtonOutcome { Equal, NewtonStrictlyInside, Incomparable, ZeroAlexander };

struct NewtonComparison {
  NewtonOutcome outcome = NewtonOutcome::ZeroAlexander;
  bool chi_hull_equals_hat_hull = false;
  Polygon newton;
  Polygon dual_thurston;
  Polygon hat_hull;
  Polygon chi_hull;
};

NewtonComparison newton_compare(const LinkData& link, const HFunction& h,
                                const std::vector<LatticePoint>& support);

const char* newton_outcome_name(NewtonOutcome o);

}  // namespace hfl
