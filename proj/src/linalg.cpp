#include "jetcalc/linalg.hpp"

#include "jetcalc/errors.hpp"

namespace jetcalc {

void RationalMatrix::addRow(std::vector<Rational> row) {
  if (static_cast<int>(row.size()) != cols_) throw DomainError("row width mismatch");
  rows_.push_back(std::move(row));
}

std::vector<int> RationalMatrix::rref() {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < cols_ && r < rows_.size(); ++c) {
    size_t p = r;
    while (p < rows_.size() && sign(rows_[p][static_cast<size_t>(c)]) == 0) ++p;
    if (p == rows_.size()) continue;
    std::swap(rows_[r], rows_[p]);
    Rational inv = 1 / rows_[r][static_cast<size_t>(c)];
    for (int k = c; k < cols_; ++k) rows_[r][static_cast<size_t>(k)] *= inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      Rational f = rows_[i][static_cast<size_t>(c)];
      if (sign(f) == 0) continue;
      for (int k = c; k < cols_; ++k)
        rows_[i][static_cast<size_t>(k)] -= f * rows_[r][static_cast<size_t>(k)];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> RationalMatrix::nullspaceBasis() {
  std::vector<int> pivots = rref();
  std::vector<bool> isPivot(static_cast<size_t>(cols_), false);
  for (int c : pivots) isPivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (isPivot[static_cast<size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<size_t>(cols_), Rational(0));
    v[static_cast<size_t>(f)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -rows_[r][static_cast<size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

int RationalMatrix::rank() { return static_cast<int>(rref().size()); }

bool inSpan(const std::vector<std::vector<Rational>>& vectors,
            const std::vector<Rational>& v) {
  if (vectors.empty()) {
    for (const Rational& x : v)
      if (sign(x) != 0) return false;
    return true;
  }
  RationalMatrix without(static_cast<int>(v.size()));
  for (const auto& w : vectors) without.addRow(w);
  RationalMatrix with(static_cast<int>(v.size()));
  for (const auto& w : vectors) with.addRow(w);
  with.addRow(v);
  return without.rank() == with.rank();
}

}  // namespace jetcalc
