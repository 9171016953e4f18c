#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace hfl {

// Finitely supported map (integer grading -> multiplicity); the empty map is
// the zero group. Gradings are total homological gradings.
class GradedDim {
public:
  GradedDim() = default;

  void add(std::int64_t grading, std::int64_t mult = 1) {
    if (mult == 0) return;
    auto [it, inserted] = dims_.emplace(grading, mult);
    if (!inserted) {
      it->second += mult;
      if (it->second == 0) dims_.erase(it);
    }
  }

  std::int64_t dim(std::int64_t grading) const {
    auto it = dims_.find(grading);
    return it == dims_.end() ? 0 : it->second;
  }

  std::int64_t rank() const {
    std::int64_t r = 0;
    for (const auto& [g, m] : dims_) r += m;
    return r;
  }

  std::int64_t euler() const {
    std::int64_t chi = 0;
    for (const auto& [g, m] : dims_) chi += (g % 2 == 0) ? m : -m;
    return chi;
  }

  bool zero() const { return dims_.empty(); }
  const std::map<std::int64_t, std::int64_t>& dims() const { return dims_; }

  GradedDim shifted(std::int64_t by) const {
    GradedDim out;
    for (const auto& [g, m] : dims_) out.dims_.emplace(g + by, m);
    return out;
  }

  GradedDim tensor(const GradedDim& other) const {
    GradedDim out;
    for (const auto& [g, m] : dims_)
      for (const auto& [h, n] : other.dims_) out.add(g + h, m * n);
    return out;
  }

  // Multiset of gaps between consecutive gradings, weighted by multiplicity;
  // equal for two groups iff they agree up to an overall grading shift.
  std::map<std::int64_t, std::int64_t> relative_profile() const {
    std::map<std::int64_t, std::int64_t> out;
    if (dims_.empty()) return out;
    std::int64_t top = dims_.rbegin()->first;
    for (const auto& [g, m] : dims_) out[top - g] = m;
    return out;
  }

  friend bool operator==(const GradedDim&, const GradedDim&) = default;

  // "F[-2] + F[-3]", multiplicities as exponents, highest grading first.
  std::string str() const {
    if (dims_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = dims_.rbegin(); it != dims_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "F";
      if (it->second != 1) os << "^" << it->second;
      os << "[" << it->first << "]";
    }
    return os.str();
  }

private:
  std::map<std::int64_t, std::int64_t> dims_;
};

}  // namespace hfl
