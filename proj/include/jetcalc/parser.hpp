#pragma once

#include <string>

#include "jetcalc/context.hpp"
#include "jetcalc/expr.hpp"

namespace jetcalc {

// Parses the expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('+'|'-')* power
//   power  := primary ('^' integer)?
//   primary:= integer | coordinate | '(' expr ')'
// Coordinates are declared variable names; a derivative coordinate is
// `<dep>_<suffix>` or `<dep>_{<suffix>}` with the suffix a string of
// independent-variable names (greedy longest match), e.g. u_xxt = u_(2,1)
// for variables (x, t). Whitespace is insignificant. Throws ParseError with
// the offending position.
JetExpr parse(const std::string& text, const JetContext& ctx);

// Canonical rendering; parse(toString(e, ctx), ctx) == e.
std::string toString(const JetExpr& e, const JetContext& ctx);
std::string toString(const Poly& p, const JetContext& ctx);

}  // namespace jetcalc
