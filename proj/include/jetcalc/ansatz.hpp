#pragma once

#include <vector>

#include "jetcalc/system.hpp"

namespace jetcalc {

// Finite truncation that makes the determining equations solvable: candidate
// generating functions are polynomials in the internal jet coordinates of
// order <= maxOrder, of total jet degree <= maxDegree, optionally with
// explicit polynomial dependence on the independent variables of total
// degree <= xtDegree.
struct AnsatzSpec {
  int maxOrder = 0;
  int maxDegree = 1;
  int xtDegree = 0;
  long monomialLimit = 20000;
};

// Deterministic (term-order sorted) list of ansatz monomials for one
// component. Throws DomainError when the guard limit is exceeded.
std::vector<Monomial> ansatzMonomials(const PdeSystem& sys, const AnsatzSpec& spec);

}  // namespace jetcalc
