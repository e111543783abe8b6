#include <doctest.h>

#include "jetcalc/symmetry.hpp"
#include "testutil.hpp"

using namespace jetcalc;

TEST_CASE("built-in systems") {
  CHECK(builtinSystem("kdv").size() == 1);
  CHECK(builtinSystem("burgers").size() == 1);
  CHECK(builtinSystem("heat").size() == 1);
  CHECK_THROWS_AS(builtinSystem("euler"), DomainError);
  JetContext ctx = builtinSystem("heat").context();
  CHECK(builtinSystem("heat").reduce(parse("u_t", ctx)) == parse("u_xx", ctx));
}

TEST_CASE("system files round-trip") {
  PdeSystem kdv = builtinSystem("kdv");
  std::string rendered = renderSystemFile(kdv);
  PdeSystem back = parseSystemFile(rendered);
  CHECK(back.context() == kdv.context());
  CHECK(back.equations()[0].leader == kdv.equations()[0].leader);
  CHECK(back.equations()[0].rhs == kdv.equations()[0].rhs);
}

TEST_CASE("system file parsing errors") {
  CHECK_THROWS_AS(parseSystemFile("dependent = u\nequation = u_t = u\n"), ParseError);
  CHECK_THROWS_AS(parseSystemFile("independent = x, t\nequation = u_t = u\n"), ParseError);
  CHECK_THROWS_AS(parseSystemFile("independent = x, t\ndependent = u\n"), ParseError);
  CHECK_THROWS_AS(
      parseSystemFile("independent = x, t\ndependent = u\nequation = u_t + u\n"),
      ParseError);
  CHECK_THROWS_AS(
      parseSystemFile("independent = x, t\ndependent = u\nequation = 2*u_t = u\n"),
      ParseError);
  CHECK_THROWS_AS(
      parseSystemFile("independent = x, t\ndependent = u\nfiber = w\nequation = u_t = u\n"),
      ParseError);
  CHECK_THROWS_AS(parseSystemFile("independent = x\ndependent = u\nnonsense\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  PdeSystem sys = parseSystemFile(
      "# Burgers\n\nindependent = x, t\ndependent = u\n"
      "equation = u_t = u_xx + u*u_x\n");
  CHECK(sys.size() == 1);
}

TEST_CASE("covering file parsing") {
  Covering cov = parseCoveringFile(
      "independent = x, t\ndependent = u\nequation = u_t = u*u_x + u_xxx\n"
      "fiber = w\nV_x[w] = u\nV_t[w] = u_xx + 1/2*u^2\n");
  CHECK(cov.numFiber() == 1);
  CHECK(allZero(checkFlatness(cov)));

  CHECK_THROWS_AS(parseCoveringFile("independent = x, t\ndependent = u\n"
                                    "equation = u_t = u\nV_x[w] = u\n"),
                  ParseError);
  CHECK_THROWS_AS(parseCoveringFile("independent = x, t\ndependent = u\nfiber = w\n"
                                    "equation = u_t = u\nV_y[w] = u\n"),
                  ParseError);
  CHECK_THROWS_AS(parseCoveringFile("independent = x, t\ndependent = u\nfiber = w\n"
                                    "equation = u_t = u\nV_x[q] = u\n"),
                  ParseError);
}

TEST_CASE("recursion operator files") {
  JetContext ctx = builtinSystem("kdv").context();
  RecursionOperator fromFile =
      parseRecursionFile("D^2\n2/3*u\n1/3*u_x*Dinv\n", ctx);
  PdeSystem kdv = builtinSystem("kdv");
  GeneratingFunction seed{parse("u_x", ctx)};
  CHECK(applyRecursion(fromFile, seed, kdv)[0] ==
        applyRecursion(RecursionOperator::kdv(ctx), seed, kdv)[0]);

  RecursionOperator inner = parseRecursionFile("u*Dinv*u_x\n", ctx);
  CHECK(applyRecursion(inner, {parse("1", ctx)}, kdv)[0] == parse("u^2", ctx));

  RecursionOperator plainD = parseRecursionFile("D\n", ctx);
  CHECK(applyRecursion(plainD, {parse("u", ctx)}, kdv)[0] == parse("u_x", ctx));

  CHECK_THROWS_AS(parseRecursionFile("", ctx), ParseError);
  CHECK_THROWS_AS(parseRecursionFile("D^2*Dinv\n", ctx), ParseError);
  CHECK_THROWS_AS(parseRecursionFile("D^x\n", ctx), ParseError);
}

TEST_CASE("Wahlquist-Estabrook representation files") {
  WeRepresentation rep = parseWeRepresentationFile("fiber = w\nB[w] = 1\n");
  CHECK(rep.fiberNames == std::vector<std::string>{"w"});
  CHECK(rep.b.coeffs[0] == JetExpr::one());
  CHECK(rep.a.coeffs[0].isZero());
  CHECK(rep.c.coeffs[0].isZero());
  CHECK(rep.d.coeffs[0].isZero());
  CHECK_THROWS_AS(parseWeRepresentationFile("B[w] = 1\n"), ParseError);
  CHECK_THROWS_AS(parseWeRepresentationFile("fiber = w\nE[w] = 1\n"), ParseError);
}

TEST_CASE("missing files raise parse errors") {
  CHECK_THROWS_AS(readFile("/nonexistent/path.sys"), ParseError);
  CHECK_THROWS_AS(loadSystem("/nonexistent/path.sys"), ParseError);
}
