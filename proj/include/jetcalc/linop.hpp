#pragma once

#include <optional>

#include "jetcalc/system.hpp"

namespace jetcalc {

// Matrix of total-derivative operators: entry (s, j) is a finite sum
// sum_sigma a^{sj}_sigma D_sigma with differential-polynomial/rational
// coefficients. Restricted operators carry the system whose E-infinity they
// live on and apply D-bar in place of D.
class CDiffOp {
 public:
  using Entry = std::map<MultiIndex, JetExpr>;

  CDiffOp(int rows, int cols);

  static CDiffOp identity(int n, int size);  // n = number of independents

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool isRestricted() const { return restricted_.has_value(); }
  const PdeSystem& system() const;

  const Entry& entry(int r, int c) const;
  void addTerm(int r, int c, const MultiIndex& sigma, const JetExpr& coeff);

  bool isZero() const;
  bool operator==(const CDiffOp& o) const;

  CDiffOp operator+(const CDiffOp& o) const;
  CDiffOp operator-(const CDiffOp& o) const;
  // Left multiplication by a function: coefficients scaled entrywise.
  CDiffOp leftMultiplied(const JetExpr& f) const;

 private:
  int rows_, cols_;
  std::vector<Entry> entries_;  // row-major
  std::optional<PdeSystem> restricted_;

  friend CDiffOp restrictOp(const CDiffOp&, const PdeSystem&);
  friend CDiffOp adjoint(const CDiffOp&);
  friend CDiffOp compose(const CDiffOp&, const CDiffOp&);
};

// Universal linearization of F = (F_1..F_l): entry (s, j, sigma) =
// dF_s/du^j_sigma. Satisfies apply(linearize(F, m), phi) =
// evolutionaryDerivation(phi, F) componentwise.
CDiffOp linearize(const std::vector<JetExpr>& F, int numIndependent, int numDependent);

// Component s = sum_{j,sigma} a^{sj}_sigma D_sigma(phi^j); restricted
// operators use D-bar and reduce the result.
std::vector<JetExpr> apply(const CDiffOp& op, const GeneratingFunction& phi);

// Formal adjoint: transpose of the shape, entrywise
// (a D_sigma)* = (-1)^{|sigma|} D_sigma o a, expanded by Leibniz into
// canonical sum-of-D form. An involution.
CDiffOp adjoint(const CDiffOp& op);

// Expanded composition a o b (shapes must chain); free-jet operators only.
CDiffOp compose(const CDiffOp& a, const CDiffOp& b);

// Coefficients reduced to internal coordinates of sys; the result applies
// restricted derivatives.
CDiffOp restrictOp(const CDiffOp& op, const PdeSystem& sys);

}  // namespace jetcalc
