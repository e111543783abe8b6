#pragma once

#include <string>

#include "jetcalc/covering.hpp"
#include "jetcalc/symmetry.hpp"

namespace jetcalc {

// System file (UTF-8 key-value text):
//   independent = x, t
//   dependent = u
//   equation = u_t = u*u_x + u_xxx
// Blank lines and lines starting with '#' are ignored.
PdeSystem parseSystemFile(const std::string& text);

// Built-in systems: "burgers", "kdv", "heat".
PdeSystem builtinSystem(const std::string& name);

// Resolves --system arguments: a built-in name or a path to a system file.
PdeSystem loadSystem(const std::string& nameOrPath);

std::string renderSystemFile(const PdeSystem& sys);

// Covering file: a system file plus
//   fiber = w
//   V_x[w] = u
//   V_t[w] = u_xx + 1/2*u^2
Covering parseCoveringFile(const std::string& text);

// Wahlquist-Estabrook representation file: fiber declaration plus generator
// lines A[w] = ..., B[w] = ..., C[w] = ..., D[w] = ... (missing entries are
// zero). Coefficients are functions of the fiber coordinates.
struct WeRepresentation {
  std::vector<std::string> fiberNames;
  VerticalField a, b, c, d;
};
WeRepresentation parseWeRepresentationFile(const std::string& text);

// Recursion-operator file: one term per line, e.g.
//   D^2
//   2/3*u
//   1/3*u_x*Dinv
// An optional trailing factor after Dinv multiplies the argument inside the
// integral: "u*Dinv*u_x" means u * Dinv(u_x * phi).
RecursionOperator parseRecursionFile(const std::string& text, const JetContext& ctx);

std::string readFile(const std::string& path);

}  // namespace jetcalc
