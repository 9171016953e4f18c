#pragma once

// Shared fixtures: catalog shortcuts, the printed h-grids of the worked
// examples, and small HSource stubs for driving single squares.

#include <array>
#include <map>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "hfunc.hpp"
#include "linkdata.hpp"

namespace hfl::testing {

inline const LinkData& catalog_link(const std::string& name) {
  return *catalog_get(name).document.link;
}

inline PatternSource catalog_pattern(const std::string& name) {
  return PatternSource(*catalog_get(name).document.pattern);
}

// Figure-style grid: rows from the top (s2 max), integer lattice.
struct GridFixture {
  std::int64_t s1_min, s2_min;
  std::vector<std::vector<std::int64_t>> rows;  // rows[0] is the top row

  std::int64_t at(std::int64_t s1, std::int64_t s2) const {
    std::int64_t s2_max = s2_min + static_cast<std::int64_t>(rows.size()) - 1;
    return rows[static_cast<std::size_t>(s2_max - s2)][static_cast<std::size_t>(s1 - s1_min)];
  }
};

// h-function of b(20,-3) as printed, s1 and s2 from -4 to 4.
inline const GridFixture& b20_grid() {
  static const GridFixture g{
      -4,
      -4,
      {
          {5, 4, 3, 2, 1, 0, 0, 0, 0},  // s2 = 4
          {5, 4, 3, 2, 1, 0, 0, 0, 0},  // s2 = 3
          {5, 4, 3, 2, 1, 0, 0, 0, 0},  // s2 = 2
          {5, 4, 3, 2, 1, 1, 0, 0, 0},  // s2 = 1
          {5, 4, 3, 2, 2, 1, 1, 1, 1},  // s2 = 0
          {5, 4, 3, 3, 2, 2, 2, 2, 2},  // s2 = -1
          {6, 5, 4, 3, 3, 3, 3, 3, 3},  // s2 = -2
          {7, 6, 5, 4, 4, 4, 4, 4, 4},  // s2 = -3
          {8, 7, 6, 5, 5, 5, 5, 5, 5},  // s2 = -4
      },
  };
  return g;
}

// h-function of L7n1 as printed, s1 and s2 from -4 to 4.
inline const GridFixture& l7n1_grid() {
  static const GridFixture g{
      -4,
      -4,
      {
          {5, 4, 3, 2, 1, 0, 0, 0, 0},  // s2 = 4
          {5, 4, 3, 2, 1, 0, 0, 0, 0},  // s2 = 3
          {5, 4, 3, 2, 1, 0, 0, 0, 0},  // s2 = 2
          {5, 4, 3, 2, 1, 1, 1, 1, 1},  // s2 = 1
          {5, 4, 3, 2, 1, 1, 1, 1, 1},  // s2 = 0
          {6, 5, 4, 3, 2, 2, 2, 2, 2},  // s2 = -1
          {6, 5, 4, 3, 3, 3, 3, 3, 3},  // s2 = -2
          {7, 6, 5, 4, 4, 4, 4, 4, 4},  // s2 = -3
          {8, 7, 6, 5, 5, 5, 5, 5, 5},  // s2 = -4
      },
  };
  return g;
}

// Rank table of the hat groups of b(20,-3), zero outside.
inline const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>& b20_hat_ranks() {
  static const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> ranks = {
      {{0, 2}, 1},  {{0, 1}, 3},  {{0, 0}, 4},  {{0, -1}, 3},  {{0, -2}, 1},
      {{1, 2}, 2},  {{1, 1}, 4},  {{1, 0}, 3},  {{1, -1}, 1},
      {{2, 2}, 1},  {{2, 1}, 2},  {{2, 0}, 1},
      {{-1, 1}, 1}, {{-1, 0}, 3}, {{-1, -1}, 4}, {{-1, -2}, 2},
      {{-2, 0}, 1}, {{-2, -1}, 2}, {{-2, -2}, 1},
  };
  return ranks;
}

// Hat ranks of b(-2,3,8) read off its h-grid, keyed by doubled coordinates.
inline const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>& b238_hat_ranks() {
  static const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> ranks = {
      {{5, 7}, 1},   {{5, 5}, 1},   {{3, 7}, 1},   {{3, 5}, 1},   {{3, 3}, 1},  {{3, 1}, 1},
      {{1, 3}, 1},   {{1, 1}, 2},   {{1, -1}, 1},  {{-1, 1}, 1},  {{-1, -1}, 2}, {{-1, -3}, 1},
      {{-3, -1}, 1}, {{-3, -3}, 1}, {{-3, -5}, 1}, {{-3, -7}, 1}, {{-5, -7}, 1}, {{-5, -5}, 1},
  };
  return ranks;
}

// An HSource serving exactly one 2x2 square (upper-right corner at the
// origin); everything else is out of range.
class SquareSource : public HSource {
public:
  SquareSource(std::int64_t ul, std::int64_t ur, std::int64_t ll, std::int64_t lr)
      : ul_(ul), ur_(ur), ll_(ll), lr_(lr) {}
  std::int64_t lk() const override { return 0; }
  std::int64_t at(LatticePoint p) const override {
    check_parity(p);
    std::int64_t x = p.s1.as_integer(), y = p.s2.as_integer();
    if (x == 0 && y == 0) return ur_;
    if (x == -1 && y == 0) return ul_;
    if (x == 0 && y == -1) return lr_;
    if (x == -1 && y == -1) return ll_;
    fail(Err::WindowTooSmall, "square source queried outside its square");
  }

private:
  std::int64_t ul_, ur_, ll_, lr_;
};

// An arbitrary integer-lattice map, for stress cases the catalog cannot
// reach (e.g. deliberately symmetry-violating data).
class MapSource : public HSource {
public:
  explicit MapSource(std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> values)
      : values_(std::move(values)) {}
  std::int64_t lk() const override { return 0; }
  std::int64_t at(LatticePoint p) const override {
    check_parity(p);
    auto it = values_.find({p.s1.as_integer(), p.s2.as_integer()});
    if (it == values_.end()) fail(Err::WindowTooSmall, "map source queried outside its domain");
    return it->second;
  }

private:
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> values_;
};

}  // namespace hfl::testing
