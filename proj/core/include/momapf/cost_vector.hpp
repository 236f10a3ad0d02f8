#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <vector>

namespace momapf {

using Cost = long long;

// Sentinel for unreachable heuristic entries. Small enough that one
// addition to a real path cost cannot overflow.
inline constexpr Cost kCostInf = std::numeric_limits<Cost>::max() / 4;

// M-dimensional integer cost. M is fixed per problem instance; all
// comparisons are exact.
class CostVector {
 public:
  CostVector() = default;
  explicit CostVector(std::size_t m, Cost fill = 0) : c_(m, fill) {}
  CostVector(std::initializer_list<Cost> xs) : c_(xs) {}

  std::size_t size() const { return c_.size(); }
  Cost operator[](std::size_t i) const { return c_[i]; }
  Cost& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool operator==(const CostVector&) const = default;

  CostVector& operator+=(const CostVector& o);
  friend CostVector operator+(CostVector a, const CostVector& b) {
    a += b;
    return a;
  }
  // this += k * o; used when waits repeat the same self-loop cost.
  CostVector& add_scaled(Cost k, const CostVector& o);

 private:
  std::vector<Cost> c_;
};

// a dominates b: every component of a is <= the one of b and at least one
// is strictly smaller. Equal vectors do not dominate each other.
bool dominates(const CostVector& a, const CostVector& b);

// Componentwise <= (dominance or equality).
bool dominates_or_equal(const CostVector& a, const CostVector& b);

// Strict lexicographic order, component 0 compared first.
bool lex_less(const CostVector& a, const CostVector& b);

}  // namespace momapf
