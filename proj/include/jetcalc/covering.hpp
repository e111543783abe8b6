#pragma once

#include <string>

#include "jetcalc/linop.hpp"

namespace jetcalc {

// tau-vertical field V = sum_a coeff_a d/dw_a; one coefficient per fiber
// coordinate, each in internal jet + fiber coordinates.
struct VerticalField {
  std::vector<JetExpr> coeffs;
};

// Bracket of two vertical fields on the same fiber set:
// [X, Y]_a = sum_b (X_b dY_a/dw_b - Y_b dX_a/dw_b).
VerticalField verticalBracket(const VerticalField& x, const VerticalField& y);

// Finite-dimensional covering of a diffiety: fiber coordinates (declared in
// the base system's context) plus one vertical field per independent
// variable, defining the extended derivatives D-hat_i = D-bar_i + V_i.
class Covering {
 public:
  Covering(PdeSystem base, std::vector<VerticalField> fields);

  const PdeSystem& base() const { return base_; }
  const JetContext& context() const { return base_.context(); }
  int numFiber() const { return context().numFiber(); }
  const VerticalField& field(int i) const;

 private:
  PdeSystem base_;
  std::vector<VerticalField> fields_;
};

// D-hat_i(e) = D-bar_i(e) + sum_a coeff^i_a de/dw_a for e in internal + fiber
// coordinates.
JetExpr extendedTotalDerivative(const Covering& cov, const JetExpr& e, int i);

struct FlatnessResidual {
  int i, j;   // independent-variable pair, i < j
  int fiber;  // fiber-coordinate index
  JetExpr value;
};

// Zero-curvature residuals [D-hat_i, D-hat_j](w_a) for all pairs i < j; the
// covering is flat iff all values are zero.
std::vector<FlatnessResidual> checkFlatness(const Covering& cov);

bool allZero(const std::vector<FlatnessResidual>& residuals);

struct NonlocalSymmetryReport {
  // Extended determining residual: the linearization of the base system
  // applied with D-hat in place of D-bar.
  std::vector<JetExpr> determining;
  // Per (independent i, fiber a): D-hat_i(psi_a) minus the extended
  // evolutionary derivation of coeff^i_a with jet weights D-hat_sigma(phi)
  // and fiber weights psi.
  struct Compatibility {
    int i;
    int fiber;
    JetExpr value;
  };
  std::vector<Compatibility> compatibility;
  bool allZero = false;
};

// The pair (phi, psi) is a nonlocal symmetry of the covering iff every
// residual vanishes.
NonlocalSymmetryReport nonlocalSymmetryResidual(const Covering& cov,
                                                const GeneratingFunction& phi,
                                                const std::vector<JetExpr>& psi);

// Which reading of the covering-search ansatz to assemble for the V_t field:
// the literal printed form carries (1/2)(B + [B,[C,B]]); the quadratic
// reading replaces the first summand by (1/2) u^2 B. The flatness checker
// adjudicates between them.
enum class WeForm { Literal, QuadraticB };

std::string toString(WeForm form);

struct WeAnsatzResult {
  Covering covering;
  // Named residuals of the bracket relations the four fields must satisfy;
  // each entry is the coefficient tuple of a vertical field.
  std::vector<std::pair<std::string, std::vector<JetExpr>>> relationResiduals;
  bool relationsHold = false;
};

// Assembles V_x = u^2 A + u B + C and the matching V_t over the KdV equation
// u_t = u u_x + u_xxx from a concrete vector-field representation of the
// four generators; reports whether the representation satisfies the bracket
// relations. Validate the result with checkFlatness.
WeAnsatzResult weAnsatz(const VerticalField& a, const VerticalField& b,
                        const VerticalField& c, const VerticalField& d,
                        const std::vector<std::string>& fiberNames, WeForm form);

}  // namespace jetcalc
