// Acceptance suite: every check is an exact identity over Q (zero
// tolerance). Prints one PASS/FAIL line per criterion and exits non-zero if
// any fails. argv[1] is the CLI binary, used by the determinism criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "jetcalc/conservation.hpp"
#include "jetcalc/covering.hpp"
#include "jetcalc/io.hpp"
#include "jetcalc/parser.hpp"
#include "jetcalc/symmetry.hpp"

#include "testutil.hpp"

using namespace jetcalc;
using testutil::Gen;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

bool expect(bool cond, const std::string& what) {
  if (!cond) note("failed: " + what);
  return cond;
}

template <typename F>
void criterion(int number, const std::string& name, double budgetSeconds, F&& body) {
  notes.clear();
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= budgetSeconds) {
    ok = false;
    note("runtime budget exceeded");
  }
  char line[256];
  std::snprintf(line, sizeof(line), "%s criterion %d: %s (%.2fs)", ok ? "PASS" : "FAIL",
                number, name.c_str(), seconds);
  std::cout << line << "\n";
  for (const std::string& s : notes) std::cout << "    " << s << "\n";
  if (!ok) ++failures;
}

std::vector<Rational> coefficientVector(const GeneratingFunction& g,
                                        const std::vector<Monomial>& monomials) {
  std::vector<Rational> v;
  for (const JetExpr& component : g) {
    if (!component.isPolynomial()) throw DomainError("basis member is not polynomial");
    size_t captured = 0;
    for (const Monomial& m : monomials) {
      auto it = component.numerator().terms().find(m);
      if (it == component.numerator().terms().end()) {
        v.emplace_back(0);
      } else {
        v.push_back(it->second);
        ++captured;
      }
    }
    if (captured != component.numerator().termCount())
      throw DomainError("basis member leaves the ansatz span");
  }
  return v;
}

bool sameSpan(const std::vector<GeneratingFunction>& a,
              const std::vector<GeneratingFunction>& b,
              const std::vector<Monomial>& monomials) {
  std::vector<std::vector<Rational>> va, vb;
  for (const auto& g : a) va.push_back(coefficientVector(g, monomials));
  for (const auto& g : b) vb.push_back(coefficientVector(g, monomials));
  for (const auto& v : va)
    if (!inSpan(vb, v)) return false;
  for (const auto& v : vb)
    if (!inSpan(va, v)) return false;
  return true;
}

bool zeroAll(const std::vector<JetExpr>& v) {
  for (const JetExpr& e : v)
    if (!e.isZero()) return false;
  return true;
}

// ---- criteria ----

bool commutationSuite() {
  bool ok = true;
  Gen gen(20260809);
  for (const char* name : {"burgers", "kdv"}) {
    PdeSystem sys = builtinSystem(name);
    const JetContext& ctx = sys.context();
    for (int it = 0; it < 60; ++it) {
      JetExpr free = gen.poly(ctx, 4, 3);
      ok &= expect(totalDerivative(totalDerivative(free, 0), 1) ==
                       totalDerivative(totalDerivative(free, 1), 0),
                   "[D_x, D_t] = 0");
      JetExpr internal = gen.poly(ctx, 4, 3, &sys);
      JetExpr xt =
          sys.restrictedTotalDerivative(sys.restrictedTotalDerivative(internal, 0), 1);
      JetExpr tx =
          sys.restrictedTotalDerivative(sys.restrictedTotalDerivative(internal, 1), 0);
      ok &= expect(xt == tx, std::string("[Dbar_x, Dbar_t] = 0 on ") + name);
    }
  }
  return ok;
}

bool burgersSymmetries() {
  bool ok = true;
  PdeSystem burgers = builtinSystem("burgers");
  const JetContext& ctx = burgers.context();
  std::vector<std::string> generators{"u_x", "u_xx + u*u_x", "t*u_x + 1",
                                      "x*u_x + 2*t*(u_xx + u*u_x) + u"};
  for (const std::string& text : generators)
    ok &= expect(zeroAll(symmetryResidual(burgers, {parse(text, ctx)})),
                 "zero residual for " + text);

  AnsatzSpec spec{2, 2, 1};
  auto basis = solveDetermining(burgers, spec);
  std::vector<Monomial> monomials = ansatzMonomials(burgers, spec);
  std::vector<std::vector<Rational>> vectors;
  for (const auto& g : basis) vectors.push_back(coefficientVector(g, monomials));
  for (const std::string& text : generators)
    ok &= expect(inSpan(vectors, coefficientVector({parse(text, ctx)}, monomials)),
                 "basis membership of " + text);
  return ok;
}

bool kdvHierarchy() {
  bool ok = true;
  PdeSystem kdv = builtinSystem("kdv");
  const JetContext& ctx = kdv.context();
  RecursionOperator R = RecursionOperator::kdv(ctx);

  GeneratingFunction flow1 = applyRecursion(R, {parse("u_x", ctx)}, kdv);
  ok &= expect(flow1[0] == parse("u*u_x + u_xxx", ctx), "R(u_x) is the KdV flow");
  GeneratingFunction flow2 = applyRecursion(R, flow1, kdv);
  ok &= expect(flow2[0] == parse("u_xxxxx + 5/3*u*u_xxx + 10/3*u_x*u_xx + 5/6*u^2*u_x", ctx),
               "R^2(u_x) is the fifth-order flow");
  ok &= expect(zeroAll(symmetryResidual(kdv, flow1)), "flow1 residual");
  ok &= expect(zeroAll(symmetryResidual(kdv, flow2)), "flow2 residual");
  ok &= expect(jacobiBracket(flow1, flow2)[0].isZero(), "flows commute");

  AnsatzSpec spec{5, 3, 0};
  auto basis = solveDetermining(kdv, spec);
  ok &= expect(basis.size() == 3, "kernel dimension 3, got " + std::to_string(basis.size()));
  std::vector<Monomial> monomials = ansatzMonomials(kdv, spec);
  std::vector<GeneratingFunction> expected{{parse("u_x", ctx)}, flow1, flow2};
  ok &= expect(sameSpan(basis, expected, monomials), "kernel equals the three flows");
  return ok;
}

bool kdvConservation() {
  bool ok = true;
  PdeSystem kdv = builtinSystem("kdv");
  const JetContext& ctx = kdv.context();
  for (const char* text : {"1", "u", "u^2/2 + u_xx"})
    ok &= expect(zeroAll(adjointResidual(kdv, {parse(text, ctx)})),
                 std::string("adjoint residual of ") + text);
  ok &= expect(adjointResidual(kdv, {parse("u_x", ctx)})[0] == parse("-u_x^2", ctx),
               "u_x rejected with residual -u_x^2");

  AnsatzSpec spec{2, 2, 0};
  auto basis = solveAdjointDetermining(kdv, spec);
  ok &= expect(basis.size() == 3, "kernel dimension 3, got " + std::to_string(basis.size()));
  std::vector<Monomial> monomials = ansatzMonomials(kdv, spec);
  std::vector<GeneratingFunction> expected{
      {parse("1", ctx)}, {parse("u", ctx)}, {parse("u^2/2 + u_xx", ctx)}};
  ok &= expect(sameSpan(basis, expected, monomials), "kernel equals {1, u, u^2/2 + u_xx}");
  return ok;
}

bool eulerCriterion() {
  bool ok = true;
  JetContext ctx({"x", "t"}, {"u"});
  Gen gen(5150);
  for (int it = 0; it < 100; ++it) {
    JetExpr e = gen.poly(ctx, 2, 3, nullptr, false);
    ok &= expect(eulerOperator(totalDerivative(e, 0), ctx)[0].isZero(),
                 "Euler annihilates D_x images");
  }
  ok &= expect(eulerOperator(parse("u_x^2/2", ctx), ctx)[0] == parse("-u_xx", ctx),
               "Euler of u_x^2/2");
  ok &= expect(eulerOperator(parse("u^3/6 - u_x^2/2", ctx), ctx)[0] ==
                   parse("u^2/2 + u_xx", ctx),
               "Euler of u^3/6 - u_x^2/2 matches the energy generating function");

  // Euler-Lagrange systems of the tested Lagrangians are self-adjoint.
  PdeSystem el1(ctx, {{Coordinate::jet(0, MultiIndex({2, 0})), JetExpr::zero()}});
  PdeSystem el2(ctx, {{Coordinate::jet(0, MultiIndex({2, 0})), parse("-u^2/2", ctx)}});
  for (const PdeSystem* sys : {&el1, &el2}) {
    SelfAdjointnessReport report = selfAdjointnessCheck(*sys);
    ok &= expect(report.selfAdjointFree && report.selfAdjointOnE,
                 "Euler-Lagrange system is self-adjoint");
  }
  return ok;
}

const char* kPotential =
    "independent = x, t\ndependent = u\nequation = u_t = u*u_x + u_xxx\n"
    "fiber = w\nV_x[w] = u\nV_t[w] = u_xx + 1/2*u^2\n";
const char* kColeHopf =
    "independent = x, t\ndependent = v\nequation = v_t = v_xx + v*v_x\n"
    "fiber = h\nV_x[h] = h*v/2\nV_t[h] = h*v^2/4 + h*v_x/2\n";

bool coverings() {
  bool ok = true;
  Covering potential = parseCoveringFile(kPotential);
  ok &= expect(allZero(checkFlatness(potential)), "KdV potential covering is flat");

  Covering coleHopf = parseCoveringFile(kColeHopf);
  ok &= expect(allZero(checkFlatness(coleHopf)), "Cole-Hopf covering is flat");

  std::string perturbedText = kPotential;
  size_t at = perturbedText.find("u_xx + 1/2*u^2");
  perturbedText.replace(at, std::string("u_xx + 1/2*u^2").size(), "u_xx + u^2");
  Covering perturbed = parseCoveringFile(perturbedText);
  ok &= expect(!allZero(checkFlatness(perturbed)), "perturbed V_t is not flat");

  VerticalField zero{{JetExpr::zero()}};
  VerticalField b{{JetExpr::one()}};
  auto literal = weAnsatz(zero, b, zero, zero, {"w"}, WeForm::Literal);
  auto quadratic = weAnsatz(zero, b, zero, zero, {"w"}, WeForm::QuadraticB);
  ok &= expect(literal.relationsHold && quadratic.relationsHold,
               "abelian representation satisfies the bracket relations");
  auto literalResiduals = checkFlatness(literal.covering);
  auto quadraticResiduals = checkFlatness(quadratic.covering);
  const JetContext& wctx = literal.covering.context();
  for (const FlatnessResidual& r : literalResiduals)
    note("literal flatness residual: " + toString(r.value, wctx));
  for (const FlatnessResidual& r : quadraticResiduals)
    note("quadratic flatness residual: " + toString(r.value, wctx));
  ok &= expect(!allZero(literalResiduals), "literal reading is not flat");
  ok &= expect(allZero(quadraticResiduals), "quadratic reading is flat");
  return ok;
}

bool bracketAlgebra() {
  bool ok = true;
  JetContext ctx({"x", "t"}, {"u"});
  Gen gen(7451);
  for (int it = 0; it < 50; ++it) {
    GeneratingFunction a{gen.poly(ctx, 2, 2)};
    GeneratingFunction b{gen.poly(ctx, 2, 2)};
    GeneratingFunction c{gen.poly(ctx, 2, 2)};
    ok &= expect(jacobiBracket(a, b)[0] == -jacobiBracket(b, a)[0], "antisymmetry");
    JetExpr cyclic = jacobiBracket(a, jacobiBracket(b, c))[0] +
                     jacobiBracket(b, jacobiBracket(c, a))[0] +
                     jacobiBracket(c, jacobiBracket(a, b))[0];
    ok &= expect(cyclic.isZero(), "Jacobi identity");
    GeneratingFunction psi{gen.poly(ctx, 2, 3)};
    ok &= expect(jacobiBracket({parse("u_x", ctx)}, psi)[0] ==
                     -psi[0].partial(Coordinate::independent(0)),
                 "{u_x, psi} = -d(psi)/dx");
  }
  return ok;
}

std::string runCommand(const std::string& command) {
  std::string outPath = "acceptance_run.out";
  std::string full = command + " > " + outPath + " 2>&1";
  int status = std::system(full.c_str());
  std::ifstream in(outPath, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return std::to_string(status) + "\n" + os.str();
}

// Expression payloads in the CLI's JSON output, keyed by the field names the
// renderer uses.
void collectExprStrings(const nlohmann::json& j, const std::string& key,
                        std::vector<std::string>& out) {
  static const std::set<std::string> exprKeys{
      "coeff",   "value", "reduced",     "divergence", "antiderivative",
      "basis",   "residual", "bracket", "euler",      "steps",
      "determining", "V_x",  "V_t",     "upsilon"};
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) collectExprStrings(v, k, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collectExprStrings(v, key, out);
  } else if (j.is_string() && exprKeys.count(key)) {
    out.push_back(j.get<std::string>());
  }
}

bool jsonExpressionsRoundTrip(const std::string& cli) {
  struct Case {
    std::string args;
    JetContext ctx;
  };
  std::vector<Case> cases{
      {"linearize --system burgers --format json", builtinSystem("burgers").context()},
      {"adjoint --system kdv --format json", builtinSystem("kdv").context()},
      {"symmetries --system kdv --order 5 --degree 3 --format json",
       builtinSystem("kdv").context()},
      {"conservation --system kdv --order 2 --degree 2 --format json",
       builtinSystem("kdv").context()},
      {"covering check --file acceptance_data/cole-hopf.cov --format json",
       parseCoveringFile(kColeHopf).context()},
  };
  bool ok = true;
  for (const Case& c : cases) {
    std::string output = runCommand("\"" + cli + "\" " + c.args);
    size_t newline = output.find('\n');
    nlohmann::json payload;
    try {
      payload = nlohmann::json::parse(output.substr(newline + 1));
    } catch (const std::exception& e) {
      ok &= expect(false, "valid JSON from: " + c.args);
      continue;
    }
    std::vector<std::string> exprs;
    collectExprStrings(payload, "", exprs);
    ok &= expect(!exprs.empty(), "expression payloads present in: " + c.args);
    for (const std::string& text : exprs) {
      JetExpr e = parse(text, c.ctx);
      ok &= expect(toString(e, c.ctx) == text,
                   "JSON expression round-trips: '" + text + "'");
    }
  }
  return ok;
}

bool determinism(const std::string& cli) {
  if (cli.empty()) {
    note("CLI path missing (pass as argv[1])");
    return false;
  }
  namespace fs = std::filesystem;
  fs::create_directories("acceptance_data");
  std::ofstream("acceptance_data/kdv-potential.cov") << kPotential;
  std::ofstream("acceptance_data/cole-hopf.cov") << kColeHopf;
  std::ofstream("acceptance_data/abelian.rep") << "fiber = w\nB[w] = 1\n";
  std::ofstream("acceptance_data/kdv.rop") << "D^2\n2/3*u\n1/3*u_x*Dinv\n";

  std::vector<std::string> commands{
      "reduce --system kdv --expr u_xt",
      "linearize --system kdv",
      "linearize --system burgers --format json",
      "adjoint --system kdv --format json",
      "symmetries --system burgers --order 2 --degree 2 --xt-degree 1",
      "symmetries --system kdv --order 5 --degree 3 --format json",
      "check-symmetry --system kdv --phi \"u*u_x + u_xxx\"",
      "check-symmetry --system kdv --phi u",
      "bracket --system kdv --phi u_x --psi \"u*u_x + u_xxx\"",
      "classify --system burgers --phi \"t*u_x + 1\"",
      "recursion --system kdv --steps 2",
      "recursion --system kdv --steps 1 --operator acceptance_data/kdv.rop --format json",
      "integrate --system kdv --expr \"u*u_x + u_xxx\"",
      "invariant-system --system kdv --phi u_x --phi \"u*u_x + u_xxx\"",
      "conservation --system kdv --order 2 --degree 2",
      "conservation --system kdv --order 2 --degree 2 --format json",
      "check-conservation --system kdv --upsilon \"u^2/2 + u_xx\"",
      "check-conservation --system kdv --upsilon u_x",
      "euler --lagrangian \"u^3/6 - u_x^2/2\"",
      "self-adjoint --system kdv",
      "check-current --system kdv --components \"-u^2/2 - u_xx;u\"",
      "covering check --file acceptance_data/kdv-potential.cov",
      "covering check --file acceptance_data/cole-hopf.cov --format json",
      "covering we --rep acceptance_data/abelian.rep",
      "covering nonlocal --file acceptance_data/kdv-potential.cov --phi u_x --psi u",
  };
  bool ok = true;
  for (const std::string& args : commands) {
    std::string command = "\"" + cli + "\" " + args;
    std::string first = runCommand(command);
    std::string second = runCommand(command);
    if (!expect(first == second, "byte-identical output for: " + args)) ok = false;
    if (!expect(!first.empty(), "output captured for: " + args)) ok = false;
  }
  ok &= jsonExpressionsRoundTrip(cli);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";

  criterion(1, "commutation suite", 10, commutationSuite);
  criterion(2, "Burgers symmetry suite", 30, burgersSymmetries);
  criterion(3, "KdV hierarchy", 60, kdvHierarchy);
  criterion(4, "KdV conservation laws", 30, kdvConservation);
  criterion(5, "Euler operator", 30, eulerCriterion);
  criterion(6, "coverings", 10, coverings);
  criterion(7, "bracket algebra", 10, bracketAlgebra);
  criterion(8, "CLI determinism", 120, [&] { return determinism(cli); });

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
