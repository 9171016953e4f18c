#include "hfunc.hpp"

#include <algorithm>
#include <optional>

#include "errors.hpp"

namespace hfl {

KnotH knot_h(const TorsionSeries& series) {
  if (!series.zero_one_valued())
    fail(Err::NotLSpaceKnotSeries, "torsion coefficients outside {0, 1}");
  KnotH out;
  out.genus_bound = series.window_hi;
  out.smax = std::max<std::int64_t>(series.window_hi, 0) + 1;
  out.smin = std::min<std::int64_t>(series.window_lo - 1, -1);
  out.values.assign(static_cast<std::size_t>(out.smax - out.smin + 1), 0);
  // h(s) = h(s+1) + a_{s+1}, downward from the zero tail
  for (std::int64_t s = out.smax - 1; s >= out.smin; --s)
    out.values[static_cast<std::size_t>(s - out.smin)] =
        out.values[static_cast<std::size_t>(s + 1 - out.smin)] + series.at(s + 1);
  return out;
}

void HSource::check_parity(LatticePoint p) const {
  std::int64_t l = lk();
  if ((p.s1.doubled() - l) % 2 != 0 || (p.s2.doubled() - l) % 2 != 0)
    fail(Err::Parity, "point " + p.str() + " is not on the lattice Z + lk/2 with lk = " + std::to_string(l));
}

std::int64_t& HFunction::cell(HalfInt s1, HalfInt s2) {
  std::int64_t i = (s1 + B_).doubled() / 2;
  std::int64_t j = (s2 + B_).doubled() / 2;
  return grid_[static_cast<std::size_t>(j * side_ + i)];
}

std::int64_t HFunction::cell(HalfInt s1, HalfInt s2) const {
  std::int64_t i = (s1 + B_).doubled() / 2;
  std::int64_t j = (s2 + B_).doubled() / 2;
  return grid_[static_cast<std::size_t>(j * side_ + i)];
}

std::int64_t recursion_drop_s1(const LinkData& link, LatticePoint p) {
  std::int64_t a1 = link.series_1.at((p.s1 - link.half_lk()).as_integer());
  return a1 - link.delta_link.col_sum_from(p.s1 - HalfInt::half(1), p.s2 + HalfInt::half(1));
}

std::int64_t recursion_drop_s2(const LinkData& link, LatticePoint p) {
  std::int64_t a2 = link.series_2.at((p.s2 - link.half_lk()).as_integer());
  return a2 - link.delta_link.row_sum_from(p.s1 + HalfInt::half(1), p.s2 - HalfInt::half(1));
}

void HFunction::validate_grid() const {
  for (std::int64_t j = 0; j < side_; ++j) {
    for (std::int64_t i = 0; i < side_; ++i) {
      std::int64_t v = grid_[static_cast<std::size_t>(j * side_ + i)];
      if (v < 0) fail(Err::NotLSpaceLinkData, "negative h value");
      if (i > 0) {
        std::int64_t d = grid_[static_cast<std::size_t>(j * side_ + i - 1)] - v;
        if (d != 0 && d != 1) fail(Err::NotLSpaceLinkData, "s1-drop outside {0, 1}");
      }
      if (j > 0) {
        std::int64_t d = grid_[static_cast<std::size_t>((j - 1) * side_ + i)] - v;
        if (d != 0 && d != 1) fail(Err::NotLSpaceLinkData, "s2-drop outside {0, 1}");
      }
    }
  }
}

HFunction HFunction::from_link(const LinkData& link, int margin) {
  HFunction out;
  out.lk_ = link.lk;
  out.h1_ = knot_h(link.series_1);
  out.h2_ = knot_h(link.series_2);

  if (link.split_alexander() && link.lk != 0)
    fail(Err::NotLSpaceLinkData, "vanishing link polynomial with nonzero linking number");

  // Window bound: Newton extents, genus extents and |lk|/2, plus the margin,
  // rounded up to the lattice parity.
  std::int64_t bd = std::abs(link.lk);
  bd = std::max(bd, 2 * std::max<std::int64_t>(out.h1_.genus_bound, 0) + link.lk);
  bd = std::max(bd, 2 * std::max<std::int64_t>(out.h2_.genus_bound, 0) + link.lk);
  for (const auto& [e, c] : link.delta_link.terms()) {
    bd = std::max({bd, std::abs(e.first.doubled()) + 1, std::abs(e.second.doubled()) + 1});
  }
  bd += 2 * margin;
  if ((bd - link.lk) % 2 != 0) ++bd;
  out.B_ = HalfInt::half(bd);
  out.side_ = bd + 1;
  out.grid_.assign(static_cast<std::size_t>(out.side_ * out.side_), 0);

  const HalfInt B = out.B_, one = HalfInt::whole(1);
  const HalfInt hlk = link.half_lk();

  if (link.split_alexander()) {
    for (HalfInt s2 = -B; s2 <= B; s2 += one)
      for (HalfInt s1 = -B; s1 <= B; s1 += one)
        out.cell(s1, s2) = out.h1_.at(s1.as_integer()) + out.h2_.at(s2.as_integer());
  } else {
    // Seeds: stabilized top row and right column.
    for (HalfInt s1 = -B; s1 <= B; s1 += one) out.cell(s1, B) = out.h1_.at((s1 - hlk).as_integer());
    for (HalfInt s2 = -B; s2 <= B; s2 += one) out.cell(B, s2) = out.h2_.at((s2 - hlk).as_integer());
    if (out.h1_.at((B - hlk).as_integer()) != out.h2_.at((B - hlk).as_integer()))
      fail(Err::NotLSpaceLinkData, "stabilization seeds disagree at the window corner");

    // Fill leftward with the s1-recursion.
    for (HalfInt s2 = B - one; s2 >= -B; s2 -= one) {
      for (HalfInt s1 = B; s1 > -B; s1 -= one) {
        std::int64_t drop = recursion_drop_s1(link, {s1, s2});
        if (drop != 0 && drop != 1)
          fail(Err::NotLSpaceLinkData, "s1-recursion drop " + std::to_string(drop) + " at " +
                                           LatticePoint{s1, s2}.str() + " is outside {0, 1}");
        out.cell(s1 - one, s2) = out.cell(s1, s2) + drop;
      }
    }

    // Re-verify every cell with the s2-recursion.
    for (HalfInt s2 = B; s2 > -B; s2 -= one) {
      for (HalfInt s1 = -B; s1 <= B; s1 += one) {
        std::int64_t drop = recursion_drop_s2(link, {s1, s2});
        if (drop != 0 && drop != 1)
          fail(Err::NotLSpaceLinkData, "s2-recursion drop " + std::to_string(drop) + " at " +
                                           LatticePoint{s1, s2}.str() + " is outside {0, 1}");
        if (out.cell(s1, s2 - one) - out.cell(s1, s2) != drop)
          fail(Err::NotLSpaceLinkData, "the two recursions disagree at " + LatticePoint{s1, s2}.str());
      }
    }

    // Boundary agreement: one further step beyond the window must be flat.
    for (HalfInt s = -B; s <= B; s += one) {
      if (recursion_drop_s1(link, {B + one, s}) != 0 || recursion_drop_s2(link, {s, B + one}) != 0)
        fail(Err::Internal, "window bound too small: recursion not stabilized at the boundary");
    }
  }

  out.validate_grid();
  return out;
}

HFunction HFunction::from_grid(const GridData& grid) {
  HFunction out;
  out.lk_ = grid.lk;
  const HalfInt one = HalfInt::whole(1);
  HalfInt bound = std::max(std::max(-grid.s1_min, grid.s1_max()), std::max(-grid.s2_min, grid.s2_max()));
  out.B_ = bound;
  out.side_ = bound.doubled() + 1;
  out.grid_.assign(static_cast<std::size_t>(out.side_ * out.side_), -1);

  const HalfInt B = out.B_;
  auto in_rect = [&grid](HalfInt s1, HalfInt s2) {
    return grid.s1_min <= s1 && s1 <= grid.s1_max() && grid.s2_min <= s2 && s2 <= grid.s2_max();
  };
  for (HalfInt s2 = -B; s2 <= B; s2 += one) {
    for (HalfInt s1 = -B; s1 <= B; s1 += one) {
      bool direct = in_rect(s1, s2);
      bool mirrored = in_rect(-s1, -s2);
      std::int64_t v;
      if (direct) {
        v = grid.at(s1, s2);
        if (mirrored) {
          std::int64_t w = grid.at(-s1, -s2) - (s1 + s2).as_integer();
          if (w != v)
            fail(Err::NotLSpaceLinkData,
                 "grid violates h(-s) = h(s) + s1 + s2 at " + LatticePoint{s1, s2}.str());
        }
      } else if (mirrored) {
        v = grid.at(-s1, -s2) - (s1 + s2).as_integer();
        if (v < 0) fail(Err::NotLSpaceLinkData, "mirrored grid value negative at " + LatticePoint{s1, s2}.str());
      } else {
        fail(Err::Schema, "grid rectangle does not determine the cell " + LatticePoint{s1, s2}.str() +
                              " (directly or by symmetry)");
      }
      out.cell(s1, s2) = v;
    }
  }
  out.validate_grid();

  // Knot closures from the stabilized top row and right column.
  auto closure = [&](bool top_row) {
    KnotH k;
    k.smin = (-B - HalfInt::half(grid.lk)).as_integer();
    k.smax = (B - HalfInt::half(grid.lk)).as_integer();
    k.values.resize(static_cast<std::size_t>(k.smax - k.smin + 1));
    for (HalfInt s = -B; s <= B; s += one) {
      std::int64_t v = top_row ? out.cell(s, B) : out.cell(B, s);
      k.values[static_cast<std::size_t>((s - HalfInt::half(grid.lk)).as_integer() - k.smin)] = v;
    }
    if (k.values.back() != 0)
      fail(Err::WindowTooSmall, "grid rectangle does not reach the stabilized zero corner");
    k.genus_bound = k.smax;
    for (std::int64_t s = k.smax; s >= k.smin && k.at(s) == 0; --s) k.genus_bound = s;
    return k;
  };
  out.h1_ = closure(true);
  out.h2_ = closure(false);
  return out;
}

std::int64_t HFunction::at(LatticePoint p) const {
  check_parity(p);
  if (inside(p)) return cell(p.s1, p.s2);
  if (p.s2 > B_) return h1_.at((p.s1 - HalfInt::half(lk_)).as_integer());
  if (p.s1 > B_) return h2_.at((p.s2 - HalfInt::half(lk_)).as_integer());
  // Far left/bottom: h(p) = h(-p) - p1 - p2, and -p falls in a region above.
  return at(-p) - (p.s1 + p.s2).as_integer();
}

PatternSource::PatternSource(const PatternData& pattern)
    : center_(pattern.center), rows_(pattern.rows) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (rows_[i][j] < 0) fail(Err::Schema, "pattern h values must be nonnegative");
      if (j > 0) {
        std::int64_t d = rows_[i][j - 1] - rows_[i][j];
        if (d != 0 && d != 1) fail(Err::InconsistentSquare, "pattern s1-drop outside {0, 1}");
      }
      if (i < 2) {
        std::int64_t d = rows_[i + 1][j] - rows_[i][j];
        if (d != 0 && d != 1) fail(Err::InconsistentSquare, "pattern s2-drop outside {0, 1}");
      }
    }
}

std::int64_t PatternSource::at(LatticePoint p) const {
  check_parity(p);
  auto lookup = [this](LatticePoint q) -> std::optional<std::int64_t> {
    std::int64_t di = (q.s1 - center_.s1).as_integer();
    std::int64_t dj = (q.s2 - center_.s2).as_integer();
    if (di < -1 || di > 1 || dj < -1 || dj > 1) return std::nullopt;
    return rows_[static_cast<std::size_t>(1 - dj)][static_cast<std::size_t>(di + 1)];
  };
  if (auto v = lookup(p)) return *v;
  if (auto v = lookup(-p)) return *v - (p.s1 + p.s2).as_integer();
  fail(Err::WindowTooSmall, "point " + p.str() + " is outside the pattern domain");
}

}  // namespace hfl
