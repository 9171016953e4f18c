#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halfint.hpp"
#include "polygon.hpp"

namespace hfl {

// One-variable Laurent polynomial over Z with exponents in (1/2)Z.
// Invariants: no stored zero coefficients; all exponents share one parity.
class Laurent1 {
public:
  Laurent1() = default;

  void add_term(HalfInt exp, std::int64_t coeff);
  std::int64_t coeff(HalfInt exp) const;
  bool zero() const { return terms_.empty(); }
  const std::map<HalfInt, std::int64_t>& terms() const { return terms_; }

  std::int64_t augmentation() const;   // value at t = 1
  bool integral_exponents() const;
  bool uniform_parity() const;
  HalfInt min_exp() const;             // requires nonzero
  HalfInt max_exp() const;
  std::int64_t leading_coeff() const;  // coefficient at max_exp
  Laurent1 negated() const;
  // this == eps * t^shift * other ?
  bool unit_equal(const Laurent1& other, int& eps, HalfInt& shift) const;
  std::string str(const std::string& var = "t") const;

private:
  std::map<HalfInt, std::int64_t> terms_;
};

// Two-variable Laurent polynomial over Z, same storage conventions.
class Laurent2 {
public:
  Laurent2() = default;

  void add_term(HalfInt e1, HalfInt e2, std::int64_t coeff);
  std::int64_t coeff(HalfInt e1, HalfInt e2) const;
  bool zero() const { return terms_.empty(); }
  const std::map<std::pair<HalfInt, HalfInt>, std::int64_t>& terms() const { return terms_; }

  bool uniform_parity() const;
  Laurent2 negated() const;
  Laurent2 inverted() const;  // p(1/t1, 1/t2)
  // Sum of coefficients in row e2 with first exponent >= e1_min.
  std::int64_t row_sum_from(HalfInt e1_min, HalfInt e2) const;
  // Sum of coefficients in column e1 with second exponent >= e2_min.
  std::int64_t col_sum_from(HalfInt e1, HalfInt e2_min) const;
  std::string str() const;

private:
  std::map<std::pair<HalfInt, HalfInt>, std::int64_t> terms_;
};

// Coefficients a_k of t/(t-1) * Delta(t): zero above the window, one below.
struct TorsionSeries {
  std::int64_t window_lo = 0;
  std::int64_t window_hi = -1;  // empty window: a_k = 1 for k <= -1... never happens for valid input
  std::vector<std::int64_t> coeffs;

  std::int64_t at(std::int64_t k) const {
    if (k > window_hi) return 0;
    if (k < window_lo) return 1;
    return coeffs[static_cast<std::size_t>(k - window_lo)];
  }
  bool zero_one_valued() const {
    for (auto c : coeffs)
      if (c != 0 && c != 1) return false;
    return true;
  }
};

// Expansion of t/(t-1) * delta = delta * (1 + t^-1 + t^-2 + ...), i.e. tail
// partial sums a_k = sum_{j >= k} c_j. Requires integral exponents and
// augmentation 1.
TorsionSeries torsion_series(const Laurent1& delta);

// Column sums: sets t2 = 1, keeping the first exponents.
Laurent1 substitute_unit(const Laurent2& p);

struct SymmetryDefect {
  bool is_symmetric = false;    // p(1/t1, 1/t2) = +-p exactly (centered)
  bool unit_symmetric = false;  // p(1/t1, 1/t2) = +-t1^-a t2^-b p for some shift
  int sign = 1;                 // meaningful only when unit_symmetric
  HalfInt shift1, shift2;       // p = sign * t1^shift1 t2^shift2 * p(1/t1, 1/t2)
};

// Does p(1/t1, 1/t2) equal p up to a unit +-t1^a t2^b? Symmetrized input
// carries the unit (+-1, 0, 0).
SymmetryDefect symmetry_defect(const Laurent2& p);

// Convex hull of the exponent set; errors on the zero polynomial.
Polygon newton_polytope(const Laurent2& p);

}  // namespace hfl
