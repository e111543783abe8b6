#include <doctest.h>

#include "jetcalc/conservation.hpp"
#include "jetcalc/symmetry.hpp"
#include "testutil.hpp"

using namespace jetcalc;
using testutil::Gen;
using testutil::xtu;

TEST_CASE("adjoint residuals for KdV generating functions") {
  JetContext ctx = xtu();
  PdeSystem kdv = builtinSystem("kdv");
  CHECK(adjointResidual(kdv, {parse("1", ctx)})[0].isZero());
  CHECK(adjointResidual(kdv, {parse("u", ctx)})[0].isZero());
  CHECK(adjointResidual(kdv, {parse("u^2/2 + u_xx", ctx)})[0].isZero());
  CHECK(adjointResidual(kdv, {parse("u_x", ctx)})[0] == parse("-u_x^2", ctx));
}

TEST_CASE("adjoint determining equations") {
  JetContext ctx = xtu();
  PdeSystem kdv = builtinSystem("kdv");
  AnsatzSpec spec{2, 2, 0};
  auto basis = solveAdjointDetermining(kdv, spec);
  CHECK(basis.size() == 3);
  for (const GeneratingFunction& upsilon : basis)
    CHECK(testutil::allZero(adjointResidual(kdv, upsilon)));

  // exact span comparison with the expected three generators
  std::vector<Monomial> monomials = ansatzMonomials(kdv, spec);
  auto toVector = [&](const GeneratingFunction& g) {
    std::vector<Rational> v;
    for (const Monomial& m : monomials) {
      auto it = g[0].numerator().terms().find(m);
      v.push_back(it == g[0].numerator().terms().end() ? Rational(0) : it->second);
    }
    return v;
  };
  std::vector<std::vector<Rational>> got, expected;
  for (const auto& b : basis) got.push_back(toVector(b));
  for (const char* text : {"1", "u", "u^2/2 + u_xx"})
    expected.push_back(toVector({parse(text, ctx)}));
  for (const auto& v : expected) CHECK(inSpan(got, v));
  for (const auto& v : got) CHECK(inSpan(expected, v));
}

TEST_CASE("adjoint determining equations for simpler systems") {
  JetContext ctx = xtu();
  PdeSystem trivial(ctx, {{Coordinate::jet(0, MultiIndex({0, 1})), JetExpr::zero()}});
  auto basis = solveAdjointDetermining(trivial, {0, 1, 0});
  CHECK(basis.size() == 2);  // spans {1, u}

  PdeSystem burgers = builtinSystem("burgers");
  auto mass = solveAdjointDetermining(burgers, {0, 1, 0});
  REQUIRE(mass.size() == 1);
  CHECK(mass[0][0] == parse("1", ctx));
}

TEST_CASE("Euler operator") {
  JetContext ctx = xtu();
  CHECK(eulerOperator(parse("u_x^2/2", ctx), ctx)[0] == parse("-u_xx", ctx));
  CHECK(eulerOperator(parse("u^3/6 - u_x^2/2", ctx), ctx)[0] ==
        parse("u^2/2 + u_xx", ctx));

  Gen gen(507);
  for (int it = 0; it < 30; ++it) {
    JetExpr e = gen.poly(ctx, 2, 3, nullptr, false);
    for (int i = 0; i < 2; ++i)
      CHECK(eulerOperator(totalDerivative(e, i), ctx)[0].isZero());
  }
}

TEST_CASE("Euler operator on multi-component contexts") {
  JetContext ctx({"x", "t"}, {"u", "v"});
  // omega = u_x v_x: E_u = -v_xx, E_v = -u_xx
  GeneratingFunction e = eulerOperator(parse("u_x*v_x", ctx), ctx);
  CHECK(e[0] == parse("-v_xx", ctx));
  CHECK(e[1] == parse("-u_xx", ctx));
  Gen gen(509);
  for (int it = 0; it < 15; ++it) {
    JetExpr f = gen.poly(ctx, 2, 3, nullptr, false);
    GeneratingFunction euler = eulerOperator(totalDerivative(f, 0), ctx);
    for (const JetExpr& component : euler) CHECK(component.isZero());
  }
}

TEST_CASE("self-adjointness") {
  JetContext laplaceCtx({"y", "x"}, {"u"});
  PdeSystem laplace(laplaceCtx,
                    {{Coordinate::jet(0, MultiIndex({0, 2})), parse("-u_yy", laplaceCtx)}});
  SelfAdjointnessReport lr = selfAdjointnessCheck(laplace);
  CHECK(lr.selfAdjointFree);
  CHECK(lr.selfAdjointOnE);

  PdeSystem kdv = builtinSystem("kdv");
  SelfAdjointnessReport kr = selfAdjointnessCheck(kdv);
  CHECK_FALSE(kr.selfAdjointFree);
  CHECK_FALSE(kr.selfAdjointOnE);

  // Euler-Lagrange equation of u_x^2/2 is -u_xx = 0
  JetContext ctx = xtu();
  PdeSystem flat(ctx, {{Coordinate::jet(0, MultiIndex({2, 0})), JetExpr::zero()}});
  CHECK(selfAdjointnessCheck(flat).selfAdjointFree);

  // conformal factor: lambda = -1 turns an odd-order operator self-adjoint
  PdeSystem transport(ctx, {{Coordinate::jet(0, MultiIndex({0, 1})), parse("u_x", ctx)}});
  CHECK_FALSE(selfAdjointnessCheck(transport).selfAdjointFree);
  CHECK(selfAdjointnessCheck(transport, parse("-1", ctx)).selfAdjointFree);
}

TEST_CASE("Noether direction: self-adjoint systems match symmetry and adjoint kernels") {
  JetContext ctx = xtu();
  // Euler-Lagrange system of u^3/6 - u_x^2/2: u_xx = -u^2/2
  PdeSystem el(ctx, {{Coordinate::jet(0, MultiIndex({2, 0})), parse("-u^2/2", ctx)}});
  CHECK(selfAdjointnessCheck(el).selfAdjointFree);
  AnsatzSpec spec{1, 2, 1};
  auto sym = solveDetermining(el, spec);
  auto law = solveAdjointDetermining(el, spec);
  CHECK(sym.size() == law.size());
  for (const GeneratingFunction& phi : sym)
    CHECK(testutil::allZero(adjointResidual(el, phi)));
  for (const GeneratingFunction& upsilon : law)
    CHECK(testutil::allZero(symmetryResidual(el, upsilon)));
}

TEST_CASE("conserved currents") {
  JetContext ctx = xtu();
  PdeSystem kdv = builtinSystem("kdv");
  // mass: J = (J^x, J^t) with divergence D_x J^x + D_t J^t
  ConservedCurrent mass{parse("-u^2/2 - u_xx", ctx), parse("u", ctx)};
  CHECK(verifyConservedCurrent(kdv, mass).isZero());

  ConservedCurrent zero{JetExpr::zero(), JetExpr::zero()};
  CHECK(verifyConservedCurrent(kdv, zero).isZero());

  ConservedCurrent bad{JetExpr::zero(), parse("u_x", ctx)};
  CHECK(verifyConservedCurrent(kdv, bad) == parse("u_x^2 + u*u_xx + u_xxxx", ctx));

  // energy: density u^2/2, flux from the generating function u
  ConservedCurrent energy{parse("-u^3/3 - u*u_xx + u_x^2/2", ctx), parse("u^2/2", ctx)};
  CHECK(verifyConservedCurrent(kdv, energy).isZero());

  CHECK_THROWS_AS(verifyConservedCurrent(kdv, {parse("u", ctx)}), DomainError);
}

TEST_CASE("fourth KdV conserved density appears at order 4") {
  JetContext ctx = xtu();
  PdeSystem kdv = builtinSystem("kdv");
  auto basis = solveAdjointDetermining(kdv, AnsatzSpec{4, 3, 0});
  CHECK(basis.size() == 4);
  for (const GeneratingFunction& upsilon : basis)
    CHECK(testutil::allZero(adjointResidual(kdv, upsilon)));
  CHECK(testutil::allZero(adjointResidual(
      kdv, {parse("u^3 + 6*u*u_xx + 3*u_x^2 + 18/5*u_xxxx", ctx)})));
}
