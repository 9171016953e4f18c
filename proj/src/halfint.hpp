#pragma once

#include <cstdint>
#include <compare>
#include <functional>
#include <stdexcept>
#include <string>

namespace hfl {

// Element of (1/2)Z stored as its double, so all arithmetic stays integral.
// Parity of `doubled` distinguishes the integer lattice from the half-integer one.
class HalfInt {
public:
  constexpr HalfInt() : d_(0) {}
  static constexpr HalfInt from_doubled(std::int64_t d) { return HalfInt(d); }
  static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }
  static constexpr HalfInt half(std::int64_t p) { return HalfInt(p); }  // p/2

  constexpr std::int64_t doubled() const { return d_; }
  constexpr bool is_integer() const { return d_ % 2 == 0; }
  // Only valid when is_integer().
  constexpr std::int64_t as_integer() const { return d_ / 2; }
  // Floor of the represented value.
  constexpr std::int64_t floor() const {
    return (d_ >= 0) ? d_ / 2 : (d_ - 1) / 2;
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.d_ + b.d_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.d_ - b.d_); }
  constexpr HalfInt operator-() const { return HalfInt(-d_); }
  HalfInt& operator+=(HalfInt o) { d_ += o.d_; return *this; }
  HalfInt& operator-=(HalfInt o) { d_ -= o.d_; return *this; }

  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  std::string str() const {
    if (is_integer()) return std::to_string(d_ / 2);
    return std::to_string(d_) + "/2";
  }

private:
  explicit constexpr HalfInt(std::int64_t d) : d_(d) {}
  std::int64_t d_;
};

inline constexpr HalfInt operator""_hi(unsigned long long n) { return HalfInt::whole(static_cast<std::int64_t>(n)); }

struct LatticePoint {
  HalfInt s1, s2;
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  constexpr LatticePoint operator-() const { return {-s1, -s2}; }
  std::string str() const { return "(" + s1.str() + ", " + s2.str() + ")"; }
};

}  // namespace hfl
