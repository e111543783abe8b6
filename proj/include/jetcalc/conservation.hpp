#pragma once

#include "jetcalc/ansatz.hpp"
#include "jetcalc/linop.hpp"

namespace jetcalc {

// n-tuple of density-flux components in internal coordinates, ordered like
// the declared independent variables.
using ConservedCurrent = std::vector<JetExpr>;

// Applies the restricted adjoint linearization to Upsilon; Upsilon generates
// a conservation law iff every component vanishes.
std::vector<JetExpr> adjointResidual(const PdeSystem& sys, const GeneratingFunction& upsilon);

// Same machinery as solveDetermining with the adjoint residual.
std::vector<GeneratingFunction> solveAdjointDetermining(const PdeSystem& sys,
                                                        const AnsatzSpec& spec);

// Variational derivative: component j = sum_sigma (-1)^{|sigma|}
// D_sigma(d omega / d u^j_sigma), computed as adjoint(linearize(omega))
// applied to 1. Annihilates total divergences.
GeneratingFunction eulerOperator(const JetExpr& omega, const JetContext& ctx);

struct SelfAdjointnessReport {
  bool selfAdjointFree = false;  // adjoint(l_F) - lambda l_F = 0 on free jets
  bool selfAdjointOnE = false;   // the same after restriction to E-infinity
};

// Compares the adjoint of the system's linearization with lambda times the
// linearization (lambda defaults to 1), entrywise in canonical form.
SelfAdjointnessReport selfAdjointnessCheck(const PdeSystem& sys,
                                           const JetExpr& lambda = JetExpr::one());

// Divergence sum_i D-bar_i(J^i); zero means J is conserved on E-infinity.
JetExpr verifyConservedCurrent(const PdeSystem& sys, const ConservedCurrent& J);

}  // namespace jetcalc
