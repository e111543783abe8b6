#pragma once

#include <compare>
#include <numeric>
#include <vector>

#include "jetcalc/errors.hpp"

namespace jetcalc {

// Exponent vector over the independent variables; orders derivative
// coordinates u^j_sigma. Length always equals the ambient number of
// independent variables.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for (int e : exp_)
      if (e < 0) throw DomainError("multi-index entries must be non-negative");
  }

  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }

  int size() const { return static_cast<int>(exp_.size()); }
  int operator[](int i) const { return exp_[static_cast<size_t>(i)]; }
  const std::vector<int>& exponents() const { return exp_; }

  // |sigma|
  int order() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

  bool isZero() const { return order() == 0; }

  // sigma + 1_i
  MultiIndex bumped(int i) const {
    checkIndex(i);
    MultiIndex r = *this;
    ++r.exp_[static_cast<size_t>(i)];
    return r;
  }

  // sigma - 1_i; requires sigma_i > 0
  MultiIndex lowered(int i) const {
    checkIndex(i);
    if (exp_[static_cast<size_t>(i)] == 0)
      throw DomainError("cannot lower multi-index with zero entry");
    MultiIndex r = *this;
    --r.exp_[static_cast<size_t>(i)];
    return r;
  }

  // componentwise >=
  bool dominates(const MultiIndex& o) const {
    if (size() != o.size()) return false;
    for (int i = 0; i < size(); ++i)
      if (exp_[static_cast<size_t>(i)] < o.exp_[static_cast<size_t>(i)]) return false;
    return true;
  }

  MultiIndex operator-(const MultiIndex& o) const {
    if (!dominates(o)) throw DomainError("multi-index difference would be negative");
    std::vector<int> d(exp_.size());
    for (size_t i = 0; i < exp_.size(); ++i) d[i] = exp_[i] - o.exp_[i];
    return MultiIndex(std::move(d));
  }

  MultiIndex operator+(const MultiIndex& o) const {
    if (size() != o.size()) throw DomainError("multi-index length mismatch");
    std::vector<int> s(exp_.size());
    for (size_t i = 0; i < exp_.size(); ++i) s[i] = exp_[i] + o.exp_[i];
    return MultiIndex(std::move(s));
  }

  bool operator==(const MultiIndex& o) const { return exp_ == o.exp_; }

  // Graded lexicographic: |sigma| first, then lexicographic on entries.
  std::strong_ordering operator<=>(const MultiIndex& o) const {
    if (auto c = order() <=> o.order(); c != 0) return c;
    if (auto c = size() <=> o.size(); c != 0) return c;
    for (size_t i = 0; i < exp_.size(); ++i)
      if (auto c = exp_[i] <=> o.exp_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  void checkIndex(int i) const {
    if (i < 0 || i >= size()) throw DomainError("independent-variable index out of range");
  }

  std::vector<int> exp_;
};

}  // namespace jetcalc
