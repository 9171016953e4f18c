#include "laurent.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace hfl {

void Laurent1::add_term(HalfInt exp, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Laurent1::coeff(HalfInt exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Laurent1::augmentation() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool Laurent1::integral_exponents() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_integer(); });
}

bool Laurent1::uniform_parity() const {
  if (terms_.empty()) return true;
  bool p = terms_.begin()->first.is_integer();
  return std::all_of(terms_.begin(), terms_.end(),
                     [p](const auto& t) { return t.first.is_integer() == p; });
}

HalfInt Laurent1::min_exp() const {
  if (terms_.empty()) fail(Err::Internal, "min_exp of zero polynomial");
  return terms_.begin()->first;
}

HalfInt Laurent1::max_exp() const {
  if (terms_.empty()) fail(Err::Internal, "max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

std::int64_t Laurent1::leading_coeff() const { return terms_.rbegin()->second; }

Laurent1 Laurent1::negated() const {
  Laurent1 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

bool Laurent1::unit_equal(const Laurent1& other, int& eps, HalfInt& shift) const {
  if (zero() || other.zero()) {
    eps = 1;
    shift = HalfInt();
    return zero() && other.zero();
  }
  if (terms_.size() != other.terms_.size()) return false;
  shift = max_exp() - other.max_exp();
  std::int64_t lc = leading_coeff(), olc = other.leading_coeff();
  if (lc != olc && lc != -olc) return false;
  eps = (lc == olc) ? 1 : -1;
  for (const auto& [e, c] : other.terms_)
    if (coeff(e + shift) != eps * c) return false;
  return true;
}

std::string Laurent1::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t a = std::abs(c);
    bool unit_exp = e.doubled() == 0;
    if (a != 1 || unit_exp) os << a;
    if (!unit_exp) {
      if (a != 1) os << "*";
      os << var;
      if (e.doubled() != 2) os << "^" << (e.is_integer() ? std::to_string(e.as_integer()) : "(" + e.str() + ")");
    }
  }
  return os.str();
}

void Laurent2::add_term(HalfInt e1, HalfInt e2, std::int64_t coeff) {
  if (coeff == 0) return;
  auto key = std::make_pair(e1, e2);
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Laurent2::coeff(HalfInt e1, HalfInt e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? 0 : it->second;
}

bool Laurent2::uniform_parity() const {
  if (terms_.empty()) return true;
  bool p1 = terms_.begin()->first.first.is_integer();
  bool p2 = terms_.begin()->first.second.is_integer();
  return std::all_of(terms_.begin(), terms_.end(), [p1, p2](const auto& t) {
    return t.first.first.is_integer() == p1 && t.first.second.is_integer() == p2;
  });
}

Laurent2 Laurent2::negated() const {
  Laurent2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Laurent2 Laurent2::inverted() const {
  Laurent2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(std::make_pair(-e.first, -e.second), c);
  return out;
}

std::int64_t Laurent2::row_sum_from(HalfInt e1_min, HalfInt e2) const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_)
    if (e.second == e2 && e.first >= e1_min) s += c;
  return s;
}

std::int64_t Laurent2::col_sum_from(HalfInt e1, HalfInt e2_min) const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_)
    if (e.first == e1 && e.second >= e2_min) s += c;
  return s;
}

std::string Laurent2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t a = std::abs(c);
    bool unit1 = e.first.doubled() == 0, unit2 = e.second.doubled() == 0;
    if (a != 1 || (unit1 && unit2)) os << a;
    auto put = [&os](const char* var, HalfInt ex) {
      os << var;
      if (ex.doubled() != 2) os << "^" << (ex.is_integer() ? std::to_string(ex.as_integer()) : "(" + ex.str() + ")");
    };
    if (!unit1) put("t1", e.first);
    if (!unit2) put("t2", e.second);
  }
  return os.str();
}

TorsionSeries torsion_series(const Laurent1& delta) {
  if (!delta.integral_exponents())
    fail(Err::HalfIntegralExponent, "component Alexander polynomial must have integer exponents");
  if (delta.augmentation() != 1)
    fail(Err::NonUnitAugmentation,
         "normalized component polynomial must evaluate to 1 at t = 1, got " +
             std::to_string(delta.augmentation()));
  TorsionSeries out;
  out.window_lo = delta.min_exp().as_integer();
  out.window_hi = delta.max_exp().as_integer();
  out.coeffs.assign(static_cast<std::size_t>(out.window_hi - out.window_lo + 1), 0);
  std::int64_t acc = 0;
  for (std::int64_t k = out.window_hi; k >= out.window_lo; --k) {
    acc += delta.coeff(HalfInt::whole(k));
    out.coeffs[static_cast<std::size_t>(k - out.window_lo)] = acc;
  }
  return out;
}

Laurent1 substitute_unit(const Laurent2& p) {
  Laurent1 out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.first, c);
  return out;
}

SymmetryDefect symmetry_defect(const Laurent2& p) {
  SymmetryDefect out;
  if (p.zero()) {
    out.is_symmetric = true;
    out.unit_symmetric = true;
    return out;
  }
  const Laurent2 q = p.inverted();
  // The only possible unit matches the extreme terms: compare the
  // lexicographically largest exponents of p and q.
  const auto& pmax = p.terms().rbegin()->first;
  const auto& qmax = q.terms().rbegin()->first;
  HalfInt a = pmax.first - qmax.first;
  HalfInt b = pmax.second - qmax.second;
  std::int64_t pc = p.terms().rbegin()->second;
  std::int64_t qc = q.terms().rbegin()->second;
  if (pc != qc && pc != -qc) return out;
  int sign = (pc == qc) ? 1 : -1;
  if (p.terms().size() != q.terms().size()) return out;
  for (const auto& [e, c] : q.terms())
    if (p.coeff(e.first + a, e.second + b) != sign * c) return out;
  out.unit_symmetric = true;
  out.is_symmetric = (a.doubled() == 0 && b.doubled() == 0);
  out.sign = sign;
  out.shift1 = a;
  out.shift2 = b;
  return out;
}

Polygon newton_polytope(const Laurent2& p) {
  if (p.zero()) fail(Err::EmptyPolytope, "Newton polytope of the zero polynomial");
  std::vector<RatPoint> pts;
  pts.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) pts.push_back({rat_of(e.first), rat_of(e.second)});
  return convex_hull(std::move(pts));
}

}  // namespace hfl
