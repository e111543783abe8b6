#pragma once

#include <vector>

#include "jetcalc/expr.hpp"

namespace jetcalc {

// m-tuple of generating-function components (one per dependent variable).
using GeneratingFunction = std::vector<JetExpr>;

// How the free-jet total derivative treats covering fiber coordinates. The
// public operators reject them; the covering module differentiates the jet
// part only and adds its own vertical term.
enum class FiberRule { Reject, Constant };

// D_i(e) = de/dx_i + sum over jet coordinates u^j_sigma occurring in e of
// u^j_{sigma+1_i} * de/du^j_sigma. Exact because only finitely many
// coordinates occur.
JetExpr totalDerivative(const JetExpr& e, int i, FiberRule rule = FiberRule::Reject);

// D_sigma = D_1^{sigma_1} ... D_n^{sigma_n}; the factors commute.
JetExpr totalDerivativeMulti(const JetExpr& e, const MultiIndex& sigma,
                             FiberRule rule = FiberRule::Reject);

// Evolutionary derivation: sum over jet coordinates of D_sigma(phi^j) *
// de/du^j_sigma. Satisfies the linearization identity checked in linop.
JetExpr evolutionaryDerivation(const GeneratingFunction& phi, const JetExpr& e);

}  // namespace jetcalc
