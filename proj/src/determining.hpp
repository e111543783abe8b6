#pragma once

#include <functional>

#include "jetcalc/ansatz.hpp"
#include "jetcalc/linalg.hpp"

namespace jetcalc::detail {

// Shared engine of solveDetermining / solveAdjointDetermining. `residual`
// must be Q-linear in its argument. Expands the residual of each unit ansatz
// monomial, collects coefficients of every residual monomial into an exact
// linear system, and maps the nullspace basis back to generating functions.
std::vector<GeneratingFunction> solveLinearDetermining(
    const PdeSystem& sys, const AnsatzSpec& spec,
    const std::function<std::vector<JetExpr>(const GeneratingFunction&)>& residual);

}  // namespace jetcalc::detail
