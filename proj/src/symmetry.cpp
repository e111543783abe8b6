#include "jetcalc/symmetry.hpp"

#include "determining.hpp"
#include "jetcalc/errors.hpp"
#include "jetcalc/parser.hpp"

namespace jetcalc {

std::vector<JetExpr> symmetryResidual(const PdeSystem& sys, const GeneratingFunction& phi) {
  if (static_cast<int>(phi.size()) != sys.context().numDependent())
    throw DomainError("generating function must have one component per dependent variable");
  GeneratingFunction reduced;
  reduced.reserve(phi.size());
  for (const JetExpr& p : phi) reduced.push_back(sys.reduce(p));
  CDiffOp lbar = restrictOp(
      linearize(sys.equationExpressions(), sys.context().numIndependent(),
                sys.context().numDependent()),
      sys);
  return jetcalc::apply(lbar, reduced);
}

std::vector<GeneratingFunction> solveDetermining(const PdeSystem& sys,
                                                 const AnsatzSpec& spec) {
  CDiffOp lbar = restrictOp(
      linearize(sys.equationExpressions(), sys.context().numIndependent(),
                sys.context().numDependent()),
      sys);
  return detail::solveLinearDetermining(
      sys, spec, [&](const GeneratingFunction& phi) { return jetcalc::apply(lbar, phi); });
}

GeneratingFunction jacobiBracket(const GeneratingFunction& phi,
                                 const GeneratingFunction& psi) {
  if (phi.size() != psi.size())
    throw DomainError("bracket arguments must have equal component counts");
  GeneratingFunction out;
  out.reserve(phi.size());
  for (size_t j = 0; j < phi.size(); ++j)
    out.push_back(evolutionaryDerivation(phi, psi[j]) - evolutionaryDerivation(psi, phi[j]));
  return out;
}

std::string toString(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Point:
      return "point";
    case SymmetryClass::Contact:
      return "contact";
    case SymmetryClass::Higher:
      return "higher";
  }
  throw DomainError("unreachable symmetry class");
}

namespace {

// Depends only on x and zero-order dependent coordinates.
bool zeroOrderOnly(const JetExpr& e) {
  for (const Coordinate& c : e.coordinates()) {
    if (c.isNonlocal()) return false;
    if (c.isJet() && c.jetOrder() > 0) return false;
  }
  return true;
}

}  // namespace

SymmetryClass classify(const GeneratingFunction& phi, const JetContext& ctx) {
  const int n = ctx.numIndependent();
  const int m = ctx.numDependent();
  if (static_cast<int>(phi.size()) != m)
    throw DomainError("generating function must have one component per dependent variable");

  int order = -1;
  bool nonlocal = false;
  for (const JetExpr& p : phi) {
    order = std::max(order, p.jetOrder());
    nonlocal = nonlocal || p.mentionsKind(CoordKind::Nonlocal);
  }
  if (nonlocal || order > 1) return SymmetryClass::Higher;

  // Point test: phi^j = b^j(x,u) - sum_i a_i(x,u) u^j_{1_i}, a_i shared.
  bool point = true;
  std::vector<JetExpr> sharedA(static_cast<size_t>(n));
  for (int j = 0; j < m && point; ++j) {
    const JetExpr& p = phi[static_cast<size_t>(j)];
    JetExpr b = p;
    for (int k = 0; k < m && point; ++k) {
      for (int i = 0; i < n && point; ++i) {
        Coordinate first = Coordinate::jet(k, MultiIndex::zero(n).bumped(i));
        JetExpr coeff = p.partial(first);
        if (k != j) {
          if (!coeff.isZero()) point = false;
          continue;
        }
        JetExpr a = -coeff;
        if (!zeroOrderOnly(a)) point = false;
        if (j == 0)
          sharedA[static_cast<size_t>(i)] = a;
        else if (!(sharedA[static_cast<size_t>(i)] == a))
          point = false;
        b += a * JetExpr::coordinate(first);
      }
    }
    if (point && !zeroOrderOnly(b)) point = false;
  }
  if (point) return SymmetryClass::Point;
  if (m == 1) return SymmetryClass::Contact;
  return SymmetryClass::Higher;
}

InvariantSystemReport invariantSystem(const PdeSystem& sys,
                                      const std::vector<GeneratingFunction>& phis) {
  const JetContext& ctx = sys.context();
  InvariantSystemReport report;
  for (const PdeEquation& eq : sys.equations())
    report.equations.push_back(ctx.coordinateName(eq.leader) + " = " +
                               toString(eq.rhs, ctx));
  for (const GeneratingFunction& phi : phis) {
    for (const JetExpr& component : phi)
      report.constraints.push_back(toString(component, ctx) + " = 0");
    std::vector<JetExpr> res = symmetryResidual(sys, phi);
    bool zero = true;
    for (const JetExpr& r : res) zero = zero && r.isZero();
    report.residuals.push_back(std::move(res));
    report.isSymmetry.push_back(zero);
  }
  return report;
}

JetExpr formalIntegrate(const JetExpr& e, int i) {
  if (!e.isPolynomial())
    throw DomainError("formal integration handles differential polynomials only");
  if (e.mentionsKind(CoordKind::Nonlocal))
    throw DomainError("formal integration of a nonlocal expression");

  int dep = -1;
  for (const Coordinate& c : e.coordinates()) {
    if (c.isIndependent()) {
      if (c.index() == i)
        throw DomainError("integrand must not depend explicitly on the integration variable");
      continue;
    }
    if (c.sigma().order() != c.sigma()[i])
      throw DomainError("integrand must be a polynomial in pure derivatives of the "
                        "integration variable");
    if (dep >= 0 && c.index() != dep)
      throw DomainError("formal integration supports a single dependent variable");
    dep = c.index();
  }

  JetExpr antiderivative;
  JetExpr rest = e;
  while (!rest.isZero()) {
    int top = -1;
    for (const Coordinate& c : rest.jetCoordinates()) top = std::max(top, c.sigma()[i]);
    if (top < 0) {
      // Jet-free remainder integrates to remainder * x_i.
      antiderivative += rest * JetExpr::coordinate(Coordinate::independent(i));
      break;
    }
    Coordinate topCoord = [&] {
      for (const Coordinate& c : rest.jetCoordinates())
        if (c.sigma()[i] == top) return c;
      throw DomainError("unreachable");
    }();
    if (top == 0)
      throw NotExactError("no differential-polynomial antiderivative: residue depends on "
                          "the dependent variable");
    if (rest.numerator().degreeIn(topCoord) > 1)
      throw NotExactError(
          "no differential-polynomial antiderivative: nonlinear in the top coordinate");
    JetExpr a = rest.partial(topCoord);
    Coordinate below = Coordinate::jet(topCoord.index(), topCoord.sigma().lowered(i));
    JetExpr piece = JetExpr::fromPoly(a.numerator().antiderivative(below));
    antiderivative += piece;
    rest -= totalDerivative(piece, i);
  }
  return antiderivative;
}

RecursionOperator RecursionOperator::kdv(const JetContext& ctx) {
  if (ctx.numDependent() != 1)
    throw DomainError("the KdV recursion operator needs a single dependent variable");
  const int n = ctx.numIndependent();
  JetExpr u = JetExpr::coordinate(Coordinate::jet(0, MultiIndex::zero(n)));
  JetExpr ux = JetExpr::coordinate(Coordinate::jet(0, MultiIndex::zero(n).bumped(0)));
  RecursionOperator R;
  R.direction = 0;
  R.terms.push_back({JetExpr::one(), 2, false, JetExpr::one()});
  R.terms.push_back({u.scaled(ratio(2, 3)), 0, false, JetExpr::one()});
  R.terms.push_back({ux.scaled(ratio(1, 3)), 0, true, JetExpr::one()});
  return R;
}

GeneratingFunction applyRecursion(const RecursionOperator& R, const GeneratingFunction& phi,
                                  const PdeSystem& sys) {
  if (sys.context().numDependent() != 1 || phi.size() != 1)
    throw DomainError("recursion operators act on single-component generating functions");
  JetExpr p = sys.reduce(phi[0]);
  JetExpr out;
  for (const RecursionTerm& term : R.terms) {
    if (term.integral) {
      JetExpr integrand = sys.reduce(term.inner * p);
      out += term.factor * formalIntegrate(integrand, R.direction);
    } else {
      JetExpr d = p;
      for (int k = 0; k < term.derivativeOrder; ++k)
        d = sys.restrictedTotalDerivative(d, R.direction);
      out += term.factor * d;
    }
  }
  return {sys.reduce(out)};
}

}  // namespace jetcalc
