#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "gradeddim.hpp"
#include "hflminus.hpp"
#include "linkdata.hpp"

namespace hfl {

// One point of the spectral sequence computing the hat group from the four
// HFL^- corners. Corner order: (1,1), (0,1), (1,0), (0,0); cube offsets
// -2, -1, -1, 0 (lower-left corner has cube grading 0).
struct SpectralState {
  LatticePoint p;
  std::array<GradedDim, 4> groups;  // in HFL^- gradings
  static constexpr std::array<int, 4> kCubeOffset{-2, -1, -1, 0};

  // Explicit bases, gradings descending; multiplicities expanded.
  std::array<std::vector<std::int64_t>, 4> basis;
  // GF(2) matrices of the U-components of d1, rows = targets.
  std::vector<std::vector<int>> u1_11_to_01, u2_11_to_10, u1_10_to_00, u2_01_to_00;

  bool has_e2 = false;
  GradedDim e2;                                  // total gradings, all cube levels
  GradedDim e2_corner11, e2_middle, e2_corner00;  // total gradings per cube level
  // Surviving (source, target) total-grading pairs a d2 could connect.
  std::vector<std::pair<std::int64_t, std::int64_t>> ambiguous_pairs;
};

SpectralState build_e1(const HSource& h, LatticePoint p);
void apply_d1(SpectralState& state);

// The hat group: the E2 page when no ambiguous pair survives, otherwise the
// mirror point resolves how many pairs a d2 kills.
GradedDim hfl_hat_at(const HSource& h, LatticePoint p);

// Tensor formula for links with vanishing Alexander polynomial.
GradedDim hfl_hat_split(const LinkData& link, LatticePoint p);

// rank H(C1(p)) for the quotient cone of U1: HFL^-(p + e1) -> HFL^-(p).
std::int64_t c1_rank(const HSource& h, LatticePoint p);

}  // namespace hfl
