#include "jetcalc/conservation.hpp"

#include "determining.hpp"
#include "jetcalc/errors.hpp"

namespace jetcalc {

namespace {

CDiffOp restrictedAdjointLinearization(const PdeSystem& sys) {
  CDiffOp l = linearize(sys.equationExpressions(), sys.context().numIndependent(),
                        sys.context().numDependent());
  return restrictOp(adjoint(l), sys);
}

}  // namespace

std::vector<JetExpr> adjointResidual(const PdeSystem& sys,
                                     const GeneratingFunction& upsilon) {
  if (static_cast<int>(upsilon.size()) != sys.size())
    throw DomainError("generating function must have one component per equation");
  GeneratingFunction reduced;
  reduced.reserve(upsilon.size());
  for (const JetExpr& p : upsilon) reduced.push_back(sys.reduce(p));
  return jetcalc::apply(restrictedAdjointLinearization(sys), reduced);
}

std::vector<GeneratingFunction> solveAdjointDetermining(const PdeSystem& sys,
                                                        const AnsatzSpec& spec) {
  if (sys.size() != sys.context().numDependent())
    throw DomainError("adjoint determining equations need a square system");
  CDiffOp lstar = restrictedAdjointLinearization(sys);
  return detail::solveLinearDetermining(
      sys, spec, [&](const GeneratingFunction& u) { return jetcalc::apply(lstar, u); });
}

GeneratingFunction eulerOperator(const JetExpr& omega, const JetContext& ctx) {
  if (!omega.isPolynomial())
    throw DomainError("the Euler operator expects a differential-polynomial density");
  CDiffOp lstar = adjoint(linearize({omega}, ctx.numIndependent(), ctx.numDependent()));
  return jetcalc::apply(lstar, GeneratingFunction{JetExpr::one()});
}

SelfAdjointnessReport selfAdjointnessCheck(const PdeSystem& sys, const JetExpr& lambda) {
  if (sys.size() != sys.context().numDependent())
    throw DomainError("self-adjointness is defined for square systems");
  CDiffOp l = linearize(sys.equationExpressions(), sys.context().numIndependent(),
                        sys.context().numDependent());
  CDiffOp delta = adjoint(l) - l.leftMultiplied(lambda);
  SelfAdjointnessReport report;
  report.selfAdjointFree = delta.isZero();
  report.selfAdjointOnE = restrictOp(delta, sys).isZero();
  return report;
}

JetExpr verifyConservedCurrent(const PdeSystem& sys, const ConservedCurrent& J) {
  if (static_cast<int>(J.size()) != sys.context().numIndependent())
    throw DomainError("conserved current needs one component per independent variable");
  JetExpr divergence;
  for (size_t i = 0; i < J.size(); ++i)
    divergence += sys.restrictedTotalDerivative(J[i], static_cast<int>(i));
  return sys.reduce(divergence);
}

}  // namespace jetcalc
