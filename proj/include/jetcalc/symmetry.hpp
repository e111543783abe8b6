#pragma once

#include <string>

#include "jetcalc/ansatz.hpp"
#include "jetcalc/linop.hpp"

namespace jetcalc {

// Applies the restricted linearization of the system to phi, component-wise;
// phi is a higher symmetry iff every component is zero.
std::vector<JetExpr> symmetryResidual(const PdeSystem& sys, const GeneratingFunction& phi);

// Exact kernel of the restricted linearization within the ansatz: expands the
// residual of a general coefficient combination, treats internal coordinates
// as algebraically independent, and returns the deterministic reduced-echelon
// basis of the resulting nullspace over Q.
std::vector<GeneratingFunction> solveDetermining(const PdeSystem& sys,
                                                 const AnsatzSpec& spec);

// {phi, psi} = E_phi(psi) - E_psi(phi), component-wise.
GeneratingFunction jacobiBracket(const GeneratingFunction& phi,
                                 const GeneratingFunction& psi);

enum class SymmetryClass { Point, Contact, Higher };

std::string toString(SymmetryClass c);

// Point: every component affine of the form b^j(x,u) - sum_i a_i(x,u) u^j_{1_i}
// with the a_i shared across components. Contact (m = 1 only): order <= 1.
SymmetryClass classify(const GeneratingFunction& phi, const JetContext& ctx);

struct InvariantSystemReport {
  // Rendered joint system {F = 0, phi^1 = 0, ..., phi^l = 0}.
  std::vector<std::string> equations;
  std::vector<std::string> constraints;
  // Reduced symmetry residual of each phi (one vector per phi).
  std::vector<std::vector<JetExpr>> residuals;
  std::vector<bool> isSymmetry;
};

InvariantSystemReport invariantSystem(const PdeSystem& sys,
                                      const std::vector<GeneratingFunction>& phis);

// p with D_i(p) = e, found by integration-by-parts descent on the top
// coordinate. Restricted to differential polynomials in pure x_i-derivatives
// of a single dependent variable with no explicit x_i dependence. Throws
// NotExactError when no differential-polynomial antiderivative exists.
JetExpr formalIntegrate(const JetExpr& e, int i);

// One summand of a recursion operator: either factor * D^order (local) or
// factor * Dinv(inner * phi) (one integration layer). The single `integral`
// flag is what limits terms to one D^{-1} apiece.
struct RecursionTerm {
  JetExpr factor = JetExpr::one();
  int derivativeOrder = 0;
  bool integral = false;
  JetExpr inner = JetExpr::one();
};

struct RecursionOperator {
  int direction = 0;  // independent variable the D and Dinv act in
  std::vector<RecursionTerm> terms;

  // D_x^2 + 2/3 u + 1/3 u_x Dinv, the operator generating the KdV hierarchy.
  static RecursionOperator kdv(const JetContext& ctx);
};

// Evaluates R(phi) over sys (single dependent variable), using
// formalIntegrate for the integral terms; the result is reduced to internal
// coordinates. NotExactError propagates with the offending integrand.
GeneratingFunction applyRecursion(const RecursionOperator& R, const GeneratingFunction& phi,
                                  const PdeSystem& sys);

}  // namespace jetcalc
