#include "momapf/cost_vector.hpp"

#include <stdexcept>

namespace momapf {

namespace {

void require_same_size(const CostVector& a, const CostVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("cost vectors have different lengths");
}

}  // namespace

CostVector& CostVector::operator+=(const CostVector& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o[i];
  return *this;
}

CostVector& CostVector::add_scaled(Cost k, const CostVector& o) {
  require_same_size(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += k * o[i];
  return *this;
}

bool dominates(const CostVector& a, const CostVector& b) {
  require_same_size(a, b);
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

bool dominates_or_equal(const CostVector& a, const CostVector& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool lex_less(const CostVector& a, const CostVector& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace momapf
