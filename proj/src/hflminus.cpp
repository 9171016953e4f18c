#include "hflminus.hpp"

#include "errors.hpp"

namespace hfl {

LocalSquare square_at(const HSource& h, LatticePoint p) {
  const HalfInt one = HalfInt::whole(1);
  return LocalSquare{
      h.at({p.s1 - one, p.s2}),
      h.at(p),
      h.at({p.s1 - one, p.s2 - one}),
      h.at({p.s1, p.s2 - one}),
  };
}

int classify_square(const LocalSquare& q) {
  std::int64_t t = q.h_ul - q.h_ur;
  std::int64_t b = q.h_ll - q.h_lr;
  std::int64_t l = q.h_ll - q.h_ul;
  std::int64_t r = q.h_lr - q.h_ur;
  auto ok = [](std::int64_t d) { return d == 0 || d == 1; };
  if (!ok(t) || !ok(b) || !ok(l) || !ok(r))
    fail(Err::InconsistentSquare, "square drops outside {0, 1}");
  if (t == 0 && b == 0 && l == 0 && r == 0) return 1;
  if (t == 0 && b == 0 && l == 1 && r == 1) return 2;
  if (t == 1 && b == 1 && l == 0 && r == 0) return 3;
  if (t == 0 && b == 1 && l == 1 && r == 0) return 4;
  if (t == 1 && b == 0 && l == 0 && r == 1) return 5;
  return 6;  // (1, 1, 1, 1): the only remaining consistent combination
}

GradedDim minus_group(const LocalSquare& q) {
  GradedDim out;
  std::int64_t h = q.h_ur;
  switch (classify_square(q)) {
    case 4: out.add(-2 * h + 1); break;
    case 5: out.add(-2 * h); break;
    case 6:
      out.add(-2 * h);
      out.add(-2 * h - 1);
      break;
    default: break;
  }
  return out;
}

std::int64_t euler_minus(const LocalSquare& q) {
  switch (classify_square(q)) {
    case 4: return -1;
    case 5: return 1;
    default: return 0;
  }
}

GradedDim hfl_minus_at(const HSource& h, LatticePoint p) { return minus_group(square_at(h, p)); }

std::int64_t euler_minus_at(const HSource& h, LatticePoint p) { return euler_minus(square_at(h, p)); }

GradedDim knot_hfk_at(const KnotH& k, std::int64_t s, Flavor flavor) {
  std::int64_t a = k.at(s);
  std::int64_t d_minus = k.at(s - 1) - a;
  std::int64_t d_plus = a - k.at(s + 1);
  GradedDim out;
  if (flavor == Flavor::Minus) {
    if (d_minus == 1) out.add(-2 * a);
    return out;
  }
  if (d_minus == 1 && d_plus == 0) out.add(-2 * a);
  else if (d_minus == 0 && d_plus == 1) out.add(-2 * a + 1);
  return out;
}

std::int64_t knot_genus(const KnotH& k) {
  for (std::int64_t s = std::max<std::int64_t>(k.genus_bound, 0); s > 0; --s)
    if (!knot_hfk_at(k, s, Flavor::Hat).zero()) return s;
  return 0;
}

}  // namespace hfl
