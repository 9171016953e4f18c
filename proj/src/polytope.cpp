#include "polytope.hpp"

#include <algorithm>

#include "errors.hpp"
#include "hflhat.hpp"
#include "hflminus.hpp"

namespace hfl {

std::vector<LatticePoint> support_hat(const HFunction& h) {
  const HalfInt one = HalfInt::whole(1);
  const HalfInt inner = h.window() - one;  // hat evaluation needs one spare cell
  std::vector<LatticePoint> support;
  for (HalfInt s2 = inner; s2 >= -inner; s2 -= one) {
    for (HalfInt s1 = -inner; s1 <= inner; s1 += one) {
      LatticePoint p{s1, s2};
      if (hfl_hat_at(h, p).zero()) continue;
      if (s1 == inner || s1 == -inner || s2 == inner || s2 == -inner)
        fail(Err::WindowTooSmall, "hat support touches the window border at " + p.str());
      support.push_back(p);
    }
  }
  return support;
}

std::pair<HFunction, std::vector<LatticePoint>> support_with_retry(const LinkData& link) {
  HFunction h = HFunction::from_link(link);
  try {
    auto support = support_hat(h);
    return {std::move(h), std::move(support)};
  } catch (const Error& e) {
    if (e.code() != Err::WindowTooSmall) throw;
  }
  HFunction wider = HFunction::from_link(link, 6);
  auto support = support_hat(wider);
  return {std::move(wider), std::move(support)};
}

Rat y_norm(const std::vector<LatticePoint>& support, const Rat& h1, const Rat& h2) {
  if (support.empty()) fail(Err::EmptySupport, "y-norm of an empty support");
  Rat best(0);
  for (const auto& p : support) best = std::max(best, rat_abs(rat_of(p.s1) * h1 + rat_of(p.s2) * h2));
  return best;
}

namespace {

void reject_trivial_component(const LinkData& link) {
  if (!link.split_alexander()) return;
  std::int64_t g1 = knot_genus(knot_h(link.series_1));
  std::int64_t g2 = knot_genus(knot_h(link.series_2));
  if (g1 == 0 || g2 == 0)
    fail(Err::TrivialComponent,
         "norm detection assumes no trivial component; component " + std::string(g1 == 0 ? "1" : "2") +
             " is a split unknot factor");
}

}  // namespace

NormReport thurston_x(const LinkData& link, const std::vector<LatticePoint>& support, const Rat& h1,
                      const Rat& h2) {
  reject_trivial_component(link);
  NormReport out;
  out.h1 = h1;
  out.h2 = h2;
  out.y_value = y_norm(support, h1, h2);
  out.x_value = Rat(2) * out.y_value - rat_abs(h1) - rat_abs(h2);
  if (out.x_value < Rat(0))
    fail(Err::NegativeNorm, "2y(h) - |h1| - |h2| is negative in direction (" + rat_str(h1) + ", " +
                                rat_str(h2) + ")");
  return out;
}

Polygon floer_polytope(const std::vector<LatticePoint>& support) {
  std::vector<RatPoint> pts;
  pts.reserve(support.size());
  for (const auto& p : support) pts.push_back({rat_of(p.s1), rat_of(p.s2)});
  return convex_hull(std::move(pts));
}

Polygon dual_thurston_polytope(const LinkData& link, const std::vector<LatticePoint>& support) {
  reject_trivial_component(link);
  if (support.empty()) fail(Err::EmptySupport, "dual Thurston polytope of an empty support");
  Polygon hull = floer_polytope(support);

  // The support function 2y - |h1| - |h2| is piecewise linear; it can only
  // break on the edge normals of the doubled hull and on the axes.
  std::vector<std::pair<std::int64_t, std::int64_t>> fan = edge_normals(hull);
  fan.emplace_back(1, 0);
  fan.emplace_back(-1, 0);
  fan.emplace_back(0, 1);
  fan.emplace_back(0, -1);
  std::sort(fan.begin(), fan.end());
  fan.erase(std::unique(fan.begin(), fan.end()), fan.end());

  std::vector<HalfPlane> planes;
  std::vector<Rat> rhs;
  for (const auto& [nx, ny] : fan) {
    Rat hx(nx), hy(ny);
    Rat x = Rat(2) * y_norm(support, hx, hy) - rat_abs(hx) - rat_abs(hy);
    if (x < Rat(0))
      fail(Err::NegativeNorm,
           "2y(h) - |h1| - |h2| is negative in direction (" + rat_str(hx) + ", " + rat_str(hy) + ")");
    planes.push_back({hx, hy, x / Rat(2)});  // Newton-comparable units
    rhs.push_back(x / Rat(2));
  }
  Polygon out = intersect_half_planes(planes);
  for (std::size_t i = 0; i < planes.size(); ++i) {
    if (out.empty() || out.support(planes[i].a, planes[i].b) != rhs[i])
      fail(Err::VerificationFailed,
           "half-plane intersection does not realize the norm in direction (" + rat_str(planes[i].a) +
               ", " + rat_str(planes[i].b) + "): a non-polytopal residue remains");
  }
  return out;
}

NewtonComparison newton_compare(const LinkData& link, const HFunction& h,
                                const std::vector<LatticePoint>& support) {
  NewtonComparison out;
  out.hat_hull = floer_polytope(support);
  std::vector<RatPoint> chi_pts;
  for (const auto& p : support)
    if (hfl_hat_at(h, p).euler() != 0) chi_pts.push_back({rat_of(p.s1), rat_of(p.s2)});
  out.chi_hull = convex_hull(std::move(chi_pts));
  out.chi_hull_equals_hat_hull = (out.chi_hull == out.hat_hull);

  if (link.split_alexander()) {
    out.outcome = NewtonOutcome::ZeroAlexander;
    return out;
  }
  out.newton = newton_polytope(link.delta_link);
  out.dual_thurston = dual_thurston_polytope(link, support);
  if (out.newton == out.dual_thurston) out.outcome = NewtonOutcome::Equal;
  else if (out.dual_thurston.contains(out.newton)) out.outcome = NewtonOutcome::NewtonStrictlyInside;
  else out.outcome = NewtonOutcome::Incomparable;
  return out;
}

const char* newton_outcome_name(NewtonOutcome o) {
  switch (o) {
    case NewtonOutcome::Equal: return "equal";
    case NewtonOutcome::NewtonStrictlyInside: return "newton_strictly_inside";
    case NewtonOutcome::Incomparable: return "incomparable";
    case NewtonOutcome::ZeroAlexander: return "zero_alexander";
  }
  return "unknown";
}

}  // namespace hfl
