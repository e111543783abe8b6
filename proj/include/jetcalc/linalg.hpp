#pragma once

#include <vector>

#include "jetcalc/rational.hpp"

namespace jetcalc {

// Dense exact matrix over Q, used for the determining-equation solvers and
// for span tests. Deterministic pivoting: columns left to right, first
// non-zero row.
class RationalMatrix {
 public:
  explicit RationalMatrix(int cols) : cols_(cols) {}

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  void addRow(std::vector<Rational> row);

  // Reduced row echelon form in place; returns the pivot column of each row.
  std::vector<int> rref();

  // Basis of the solution space of (this) x = 0, one vector per free column,
  // ordered by free-column index. The matrix is reduced in place.
  std::vector<std::vector<Rational>> nullspaceBasis();

  int rank();

 private:
  int cols_;
  std::vector<std::vector<Rational>> rows_;
};

// True when v is a Q-linear combination of the given vectors.
bool inSpan(const std::vector<std::vector<Rational>>& vectors,
            const std::vector<Rational>& v);

}  // namespace jetcalc
