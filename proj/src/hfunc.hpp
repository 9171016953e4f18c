#pragma once

#include <cstdint>
#include <vector>

#include "halfint.hpp"
#include "laurent.hpp"
#include "linkdata.hpp"

namespace hfl {

// h-function of a knot: finite window plus closed-form tails
// (0 above the window, slope -1 below).
struct KnotH {
  std::int64_t genus_bound = 0;  // top of the torsion window
  std::int64_t smin = 0, smax = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(std::int64_t s) const {
    if (s >= smax) return values.back();
    if (s < smin) return values.front() + (smin - s);
    return values[static_cast<std::size_t>(s - smin)];
  }
};

// h(s) = sum_{k > s} a_k, by downward recursion from the zero tail.
// Rejects series with coefficients outside {0, 1}.
KnotH knot_h(const TorsionSeries& series);

// Read access to an h-function on the lattice (Z + lk/2)^2.
class HSource {
public:
  virtual ~HSource() = default;
  virtual std::int64_t lk() const = 0;
  virtual std::int64_t at(LatticePoint p) const = 0;
  void check_parity(LatticePoint p) const;
};

// h-function of a two-component link on a window [-B, B]^2, with the
// stabilization and symmetry formulas extending beyond the window.
class HFunction : public HSource {
public:
  // Computes the grid from Alexander data (the s1-recursion fills, the
  // s2-recursion re-verifies every cell); margin widens the window.
  static HFunction from_link(const LinkData& link, int margin = 3);
  // Completes a stored rectangle to the symmetric window via
  // h(-s) = h(s) + s1 + s2 and re-validates all drops.
  static HFunction from_grid(const GridData& grid);

  std::int64_t lk() const override { return lk_; }
  HalfInt window() const { return B_; }
  const KnotH& h1() const { return h1_; }
  const KnotH& h2() const { return h2_; }

  std::int64_t at(LatticePoint p) const override;

private:
  HFunction() = default;
  void validate_grid() const;
  std::int64_t& cell(HalfInt s1, HalfInt s2);
  std::int64_t cell(HalfInt s1, HalfInt s2) const;
  bool inside(LatticePoint p) const { return -B_ <= p.s1 && p.s1 <= B_ && -B_ <= p.s2 && p.s2 <= B_; }

  std::int64_t lk_ = 0;
  HalfInt B_;
  std::int64_t side_ = 0;
  std::vector<std::int64_t> grid_;  // row-major, s2 major from -B upward
  KnotH h1_, h2_;
};

// h defined only on the 3x3 block around the center and, via the symmetry
// formula, around the mirrored center.
class PatternSource : public HSource {
public:
  explicit PatternSource(const PatternData& pattern);
  std::int64_t lk() const override { return 0; }
  LatticePoint center() const { return center_; }
  std::int64_t at(LatticePoint p) const override;

private:
  LatticePoint center_;
  std::array<std::array<std::int64_t, 3>, 3> rows_;
};

// Recursion drops straight from the Alexander data (the right-hand sides of
// the h-function recursion); exposed for cross-checking.
std::int64_t recursion_drop_s1(const LinkData& link, LatticePoint p);  // h(p - e1) - h(p)
std::int64_t recursion_drop_s2(const LinkData& link, LatticePoint p);  // h(p - e2) - h(p)

}  // namespace hfl
