// Command-line front end: deterministic text/JSON output, exit code 0 on
// success, 1 on domain errors (NotExact, non-flat, nonzero residual of a
// requested check), 2 on usage/parse errors.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "jetcalc/conservation.hpp"
#include "jetcalc/covering.hpp"
#include "jetcalc/io.hpp"
#include "jetcalc/parser.hpp"
#include "jetcalc/symmetry.hpp"

using json = nlohmann::json;
using namespace jetcalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
  std::string tag;
  std::string message;
};

[[noreturn]] void failUsage(const std::string& tag, const std::string& message) {
  throw CliError{kExitUsage, tag, message};
}

[[noreturn]] void failDomain(const std::string& tag, const std::string& message) {
  throw CliError{kExitDomain, tag, message};
}

// Everything parsed from files or flags is a usage error when malformed.
template <typename F>
auto loadInput(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    failUsage("E_PARSE", e.what());
  } catch (const Error& e) {
    failUsage("E_INPUT", e.what());
  }
}

template <typename F>
auto compute(F&& f) {
  try {
    return f();
  } catch (const NotExactError& e) {
    failDomain("E_NOT_EXACT", e.what());
  } catch (const Error& e) {
    failDomain("E_DOMAIN", e.what());
  }
}

std::vector<JetExpr> parseExprList(const std::string& text, const JetContext& ctx) {
  std::vector<JetExpr> out;
  size_t start = 0;
  while (true) {
    size_t semi = text.find(';', start);
    std::string piece =
        semi == std::string::npos ? text.substr(start) : text.substr(start, semi - start);
    out.push_back(parse(piece, ctx));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::string renderExprList(const std::vector<JetExpr>& list, const JetContext& ctx) {
  std::string s;
  for (size_t i = 0; i < list.size(); ++i) {
    if (i) s += "; ";
    s += toString(list[i], ctx);
  }
  return s;
}

json exprListJson(const std::vector<JetExpr>& list, const JetContext& ctx) {
  json arr = json::array();
  for (const JetExpr& e : list) arr.push_back(toString(e, ctx));
  return arr;
}

std::string sigmaText(const MultiIndex& sigma) {
  std::string s = "D[";
  for (int i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
  return s + "]";
}

std::string coeffText(const JetExpr& coeff, const JetContext& ctx) {
  std::string s = toString(coeff, ctx);
  if (coeff.isPolynomial() && coeff.numerator().termCount() <= 1) return s;
  return "(" + s + ")";
}

std::string entryText(const CDiffOp::Entry& entry, const JetContext& ctx) {
  if (entry.empty()) return "0";
  std::string s;
  for (auto it = entry.rbegin(); it != entry.rend(); ++it) {
    JetExpr coeff = it->second;
    bool negative = coeff.isPolynomial() && coeff.numerator().termCount() == 1 &&
                    sign(coeff.numerator().leadingCoefficient()) < 0;
    if (negative) coeff = -coeff;
    std::string piece;
    if (it->first.isZero())
      piece = coeffText(coeff, ctx);
    else if (coeff.isOne())
      piece = sigmaText(it->first);
    else
      piece = coeffText(coeff, ctx) + "*" + sigmaText(it->first);
    if (s.empty())
      s += (negative ? "-" : "") + piece;
    else
      s += (negative ? " - " : " + ") + piece;
  }
  return s;
}

std::string operatorText(const CDiffOp& op, const JetContext& ctx) {
  std::string s;
  for (int r = 0; r < op.rows(); ++r) {
    for (int c = 0; c < op.cols(); ++c) {
      s += "entry[" + std::to_string(r) + "][" + std::to_string(c) +
           "] = " + entryText(op.entry(r, c), ctx) + "\n";
    }
  }
  return s;
}

json operatorJson(const CDiffOp& op, const JetContext& ctx) {
  json entries = json::array();
  for (int r = 0; r < op.rows(); ++r) {
    for (int c = 0; c < op.cols(); ++c) {
      json terms = json::array();
      const auto& entry = op.entry(r, c);
      for (auto it = entry.rbegin(); it != entry.rend(); ++it)
        terms.push_back(
            {{"sigma", it->first.exponents()}, {"coeff", toString(it->second, ctx)}});
      entries.push_back({{"row", r}, {"col", c}, {"terms", terms}});
    }
  }
  return {{"rows", op.rows()},
          {"cols", op.cols()},
          {"restricted", op.isRestricted()},
          {"entries", entries}};
}

struct Output {
  bool jsonMode = false;
  json payload = json::object();
  std::string text;

  void line(const std::string& s) { text += s + "\n"; }
  void emit() const {
    if (jsonMode)
      std::cout << payload.dump(2) << "\n";
    else
      std::cout << text;
  }
};

struct CommonArgs {
  std::string system = "kdv";
  std::string format = "text";
};

void addFormatFlag(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--format", args.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

void addSystemFlag(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--system", args.system,
                  "System file path or built-in name (burgers, kdv, heat)");
  addFormatFlag(cmd, args);
}

bool residualsZero(const std::vector<JetExpr>& rs) {
  for (const JetExpr& r : rs)
    if (!r.isZero()) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact jet-space calculus for PDE symmetry analysis"};
  app.require_subcommand(1);

  int exitCode = kExitOk;
  Output out;

  // reduce
  CommonArgs reduceArgs;
  std::string reduceExpr;
  auto* cmdReduce = app.add_subcommand("reduce", "Reduce an expression to internal coordinates");
  addSystemFlag(cmdReduce, reduceArgs);
  cmdReduce->add_option("--expr", reduceExpr, "Expression to reduce")->required();
  cmdReduce->callback([&] {
    out.jsonMode = reduceArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(reduceArgs.system); });
    JetExpr e = loadInput([&] { return parse(reduceExpr, sys.context()); });
    JetExpr r = compute([&] { return sys.reduce(e); });
    out.payload["reduced"] = toString(r, sys.context());
    out.line("reduced: " + toString(r, sys.context()));
  });

  // linearize
  CommonArgs linArgs;
  bool linRestricted = false;
  auto* cmdLin = app.add_subcommand("linearize", "Universal linearization of the system");
  addSystemFlag(cmdLin, linArgs);
  cmdLin->add_flag("--restricted", linRestricted, "Restrict the coefficients to the manifold");
  cmdLin->callback([&] {
    out.jsonMode = linArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(linArgs.system); });
    CDiffOp l = compute([&] {
      CDiffOp free = linearize(sys.equationExpressions(), sys.context().numIndependent(),
                               sys.context().numDependent());
      return linRestricted ? restrictOp(free, sys) : free;
    });
    out.payload["operator"] = operatorJson(l, sys.context());
    out.line(operatorText(l, sys.context()) + operatorJson(l, sys.context()).dump());
  });

  // adjoint
  CommonArgs adjArgs;
  auto* cmdAdj = app.add_subcommand("adjoint", "Formal adjoint of the system linearization");
  addSystemFlag(cmdAdj, adjArgs);
  cmdAdj->callback([&] {
    out.jsonMode = adjArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(adjArgs.system); });
    CDiffOp lstar = compute([&] {
      return adjoint(linearize(sys.equationExpressions(), sys.context().numIndependent(),
                               sys.context().numDependent()));
    });
    out.payload["operator"] = operatorJson(lstar, sys.context());
    out.line(operatorText(lstar, sys.context()) + operatorJson(lstar, sys.context()).dump());
  });

  // symmetries
  CommonArgs symArgs;
  AnsatzSpec symSpec;
  auto* cmdSym = app.add_subcommand("symmetries", "Solve the symmetry determining equations");
  addSystemFlag(cmdSym, symArgs);
  cmdSym->add_option("--order", symSpec.maxOrder, "Maximum jet order of the ansatz")->required();
  cmdSym->add_option("--degree", symSpec.maxDegree, "Maximum jet polynomial degree")->required();
  cmdSym->add_option("--xt-degree", symSpec.xtDegree, "Maximum explicit x-degree (0 = none)");
  cmdSym->add_option("--limit", symSpec.monomialLimit, "Ansatz monomial guard");
  cmdSym->callback([&] {
    out.jsonMode = symArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(symArgs.system); });
    auto basis = compute([&] { return solveDetermining(sys, symSpec); });
    out.payload["basis"] = json::array();
    out.line("basis dimension: " + std::to_string(basis.size()));
    for (const GeneratingFunction& phi : basis) {
      out.payload["basis"].push_back(exprListJson(phi, sys.context()));
      out.line("phi = " + renderExprList(phi, sys.context()));
    }
  });

  // check-symmetry
  CommonArgs chkSymArgs;
  std::string chkSymPhi;
  auto* cmdChkSym = app.add_subcommand("check-symmetry", "Residual of the determining equation");
  addSystemFlag(cmdChkSym, chkSymArgs);
  cmdChkSym->add_option("--phi", chkSymPhi, "Generating function (';'-separated components)")
      ->required();
  cmdChkSym->callback([&] {
    out.jsonMode = chkSymArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(chkSymArgs.system); });
    GeneratingFunction phi = loadInput([&] { return parseExprList(chkSymPhi, sys.context()); });
    auto rs = compute([&] { return symmetryResidual(sys, phi); });
    bool zero = residualsZero(rs);
    out.payload["residual"] = exprListJson(rs, sys.context());
    out.payload["symmetry"] = zero;
    out.line("residual: " + renderExprList(rs, sys.context()));
    if (!zero) exitCode = kExitDomain;
  });

  // bracket
  CommonArgs brArgs;
  std::string brPhi, brPsi;
  auto* cmdBr = app.add_subcommand("bracket", "Jacobi bracket of two generating functions");
  addSystemFlag(cmdBr, brArgs);
  cmdBr->add_option("--phi", brPhi)->required();
  cmdBr->add_option("--psi", brPsi)->required();
  cmdBr->callback([&] {
    out.jsonMode = brArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(brArgs.system); });
    GeneratingFunction phi = loadInput([&] { return parseExprList(brPhi, sys.context()); });
    GeneratingFunction psi = loadInput([&] { return parseExprList(brPsi, sys.context()); });
    GeneratingFunction b = compute([&] { return jacobiBracket(phi, psi); });
    out.payload["bracket"] = exprListJson(b, sys.context());
    out.line("bracket: " + renderExprList(b, sys.context()));
  });

  // classify
  CommonArgs clArgs;
  std::string clPhi;
  auto* cmdCl = app.add_subcommand("classify", "Point/contact/higher classification");
  addSystemFlag(cmdCl, clArgs);
  cmdCl->add_option("--phi", clPhi)->required();
  cmdCl->callback([&] {
    out.jsonMode = clArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(clArgs.system); });
    GeneratingFunction phi = loadInput([&] { return parseExprList(clPhi, sys.context()); });
    SymmetryClass c = compute([&] { return classify(phi, sys.context()); });
    out.payload["class"] = toString(c);
    out.line("class: " + toString(c));
  });

  // recursion
  CommonArgs recArgs;
  int recSteps = 1;
  std::string recSeed = "u_x";
  std::string recFile;
  auto* cmdRec = app.add_subcommand("recursion", "Apply a recursion operator repeatedly");
  addSystemFlag(cmdRec, recArgs);
  cmdRec->add_option("--steps", recSteps, "Number of applications")->check(CLI::PositiveNumber);
  cmdRec->add_option("--phi", recSeed, "Seed generating function");
  cmdRec->add_option("--operator", recFile,
                     "Recursion-operator file (default: the built-in KdV operator)");
  cmdRec->callback([&] {
    out.jsonMode = recArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(recArgs.system); });
    RecursionOperator R = loadInput([&] {
      return recFile.empty() ? RecursionOperator::kdv(sys.context())
                             : parseRecursionFile(readFile(recFile), sys.context());
    });
    GeneratingFunction phi = loadInput([&] { return parseExprList(recSeed, sys.context()); });
    out.payload["steps"] = json::array();
    compute([&] {
      for (int k = 0; k < recSteps; ++k) {
        phi = applyRecursion(R, phi, sys);
        out.payload["steps"].push_back(exprListJson(phi, sys.context()));
        out.line("R^" + std::to_string(k + 1) + ": " + renderExprList(phi, sys.context()));
      }
      return 0;
    });
  });

  // integrate
  CommonArgs intArgs;
  std::string intExpr;
  std::string intVar;
  auto* cmdInt = app.add_subcommand("integrate", "Formal antiderivative along one variable");
  addSystemFlag(cmdInt, intArgs);
  cmdInt->add_option("--expr", intExpr)->required();
  cmdInt->add_option("--direction", intVar,
                     "Independent variable to integrate in (default: first declared)");
  cmdInt->callback([&] {
    out.jsonMode = intArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(intArgs.system); });
    JetExpr e = loadInput([&] { return parse(intExpr, sys.context()); });
    int dir = 0;
    if (!intVar.empty()) {
      auto i = sys.context().independentIndex(intVar);
      if (!i) failUsage("E_INPUT", "unknown independent variable '" + intVar + "'");
      dir = *i;
    }
    JetExpr p = compute([&] { return formalIntegrate(e, dir); });
    out.payload["antiderivative"] = toString(p, sys.context());
    out.line("antiderivative: " + toString(p, sys.context()));
  });

  // invariant-system
  CommonArgs invArgs;
  std::vector<std::string> invPhis;
  auto* cmdInv = app.add_subcommand("invariant-system",
                                    "Emit the joint system {F = 0, phi = 0, ...}");
  addSystemFlag(cmdInv, invArgs);
  cmdInv->add_option("--phi", invPhis, "Generating function (repeatable)")->required();
  cmdInv->callback([&] {
    out.jsonMode = invArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(invArgs.system); });
    std::vector<GeneratingFunction> phis;
    for (const std::string& text : invPhis)
      phis.push_back(loadInput([&] { return parseExprList(text, sys.context()); }));
    InvariantSystemReport report = compute([&] { return invariantSystem(sys, phis); });
    out.payload["equations"] = report.equations;
    out.payload["constraints"] = report.constraints;
    out.payload["symmetry"] = report.isSymmetry;
    json residuals = json::array();
    for (size_t k = 0; k < report.residuals.size(); ++k)
      residuals.push_back(exprListJson(report.residuals[k], sys.context()));
    out.payload["residuals"] = residuals;
    for (const std::string& eq : report.equations) out.line("equation = " + eq);
    for (const std::string& c : report.constraints) out.line("constraint = " + c);
    for (size_t k = 0; k < phis.size(); ++k)
      out.line("residual[" + std::to_string(k) + "]: " +
               renderExprList(report.residuals[k], sys.context()) +
               (report.isSymmetry[k] ? " (symmetry)" : " (not a symmetry)"));
  });

  // conservation
  CommonArgs conArgs;
  AnsatzSpec conSpec;
  auto* cmdCon = app.add_subcommand("conservation",
                                    "Solve the conservation-law determining equations");
  addSystemFlag(cmdCon, conArgs);
  cmdCon->add_option("--order", conSpec.maxOrder)->required();
  cmdCon->add_option("--degree", conSpec.maxDegree)->required();
  cmdCon->add_option("--xt-degree", conSpec.xtDegree);
  cmdCon->add_option("--limit", conSpec.monomialLimit);
  cmdCon->callback([&] {
    out.jsonMode = conArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(conArgs.system); });
    auto basis = compute([&] { return solveAdjointDetermining(sys, conSpec); });
    out.payload["basis"] = json::array();
    out.line("basis dimension: " + std::to_string(basis.size()));
    for (const GeneratingFunction& upsilon : basis) {
      out.payload["basis"].push_back(exprListJson(upsilon, sys.context()));
      out.line("upsilon = " + renderExprList(upsilon, sys.context()));
    }
  });

  // check-conservation
  CommonArgs chkConArgs;
  std::string chkConUpsilon;
  auto* cmdChkCon =
      app.add_subcommand("check-conservation", "Residual of the adjoint determining equation");
  addSystemFlag(cmdChkCon, chkConArgs);
  cmdChkCon->add_option("--upsilon", chkConUpsilon)->required();
  cmdChkCon->callback([&] {
    out.jsonMode = chkConArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(chkConArgs.system); });
    GeneratingFunction upsilon =
        loadInput([&] { return parseExprList(chkConUpsilon, sys.context()); });
    auto rs = compute([&] { return adjointResidual(sys, upsilon); });
    bool zero = residualsZero(rs);
    out.payload["residual"] = exprListJson(rs, sys.context());
    out.payload["generating-function"] = zero;
    out.line("residual: " + renderExprList(rs, sys.context()));
    if (!zero) exitCode = kExitDomain;
  });

  // euler
  CommonArgs eulArgs;
  std::string eulLagrangian;
  auto* cmdEul = app.add_subcommand("euler", "Euler operator of a Lagrangian density");
  addSystemFlag(cmdEul, eulArgs);
  cmdEul->add_option("--lagrangian", eulLagrangian)->required();
  cmdEul->callback([&] {
    out.jsonMode = eulArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(eulArgs.system); });
    JetExpr omega = loadInput([&] { return parse(eulLagrangian, sys.context()); });
    GeneratingFunction e = compute([&] { return eulerOperator(omega, sys.context()); });
    out.payload["euler"] = exprListJson(e, sys.context());
    out.line("euler: " + renderExprList(e, sys.context()));
  });

  // self-adjoint
  CommonArgs saArgs;
  std::string saLambda = "1";
  auto* cmdSa = app.add_subcommand("self-adjoint", "Compare the adjoint with lambda times l_F");
  addSystemFlag(cmdSa, saArgs);
  cmdSa->add_option("--lambda", saLambda, "Conformal factor (default 1)");
  cmdSa->callback([&] {
    out.jsonMode = saArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(saArgs.system); });
    JetExpr lambda = loadInput([&] { return parse(saLambda, sys.context()); });
    SelfAdjointnessReport report = compute([&] { return selfAdjointnessCheck(sys, lambda); });
    out.payload["self-adjoint-free"] = report.selfAdjointFree;
    out.payload["self-adjoint-on-manifold"] = report.selfAdjointOnE;
    out.line(std::string("self-adjoint (free jets): ") +
             (report.selfAdjointFree ? "yes" : "no"));
    out.line(std::string("self-adjoint (on the manifold): ") +
             (report.selfAdjointOnE ? "yes" : "no"));
    if (!report.selfAdjointOnE) exitCode = kExitDomain;
  });

  // check-current
  CommonArgs ccArgs;
  std::string ccComponents;
  auto* cmdCc = app.add_subcommand("check-current", "Divergence of a conserved current");
  addSystemFlag(cmdCc, ccArgs);
  cmdCc->add_option("--components", ccComponents,
                    "';'-separated components, one per independent variable")
      ->required();
  cmdCc->callback([&] {
    out.jsonMode = ccArgs.format == "json";
    PdeSystem sys = loadInput([&] { return loadSystem(ccArgs.system); });
    ConservedCurrent J = loadInput([&] { return parseExprList(ccComponents, sys.context()); });
    JetExpr divergence = compute([&] { return verifyConservedCurrent(sys, J); });
    out.payload["divergence"] = toString(divergence, sys.context());
    out.payload["conserved"] = divergence.isZero();
    out.line("divergence: " + toString(divergence, sys.context()));
    if (!divergence.isZero()) exitCode = kExitDomain;
  });

  // covering
  auto* cmdCov = app.add_subcommand("covering", "Coverings: check, we, nonlocal");
  cmdCov->require_subcommand(1);

  CommonArgs covChkArgs;
  std::string covChkFile;
  auto* cmdCovChk = cmdCov->add_subcommand("check", "Zero-curvature check of a covering file");
  addFormatFlag(cmdCovChk, covChkArgs);
  cmdCovChk->add_option("--file", covChkFile)->required();
  cmdCovChk->callback([&] {
    out.jsonMode = covChkArgs.format == "json";
    Covering cov = loadInput([&] { return parseCoveringFile(readFile(covChkFile)); });
    auto residuals = compute([&] { return checkFlatness(cov); });
    bool flat = allZero(residuals);
    const JetContext& ctx = cov.context();
    json rs = json::array();
    for (const FlatnessResidual& r : residuals) {
      rs.push_back({{"i", ctx.independentName(r.i)},
                    {"j", ctx.independentName(r.j)},
                    {"fiber", ctx.fiberName(r.fiber)},
                    {"value", toString(r.value, ctx)}});
      out.line("residual[" + ctx.independentName(r.i) + "," + ctx.independentName(r.j) +
               "][" + ctx.fiberName(r.fiber) + "]: " + toString(r.value, ctx));
    }
    out.payload["residuals"] = rs;
    out.payload["flat"] = flat;
    out.line(std::string("flat: ") + (flat ? "yes" : "no"));
    if (!flat) exitCode = kExitDomain;
  });

  CommonArgs covWeArgs;
  std::string covWeRep;
  std::string covWeForm = "both";
  auto* cmdCovWe = cmdCov->add_subcommand("we", "Assemble the covering-search ansatz over KdV");
  addFormatFlag(cmdCovWe, covWeArgs);
  cmdCovWe->add_option("--rep", covWeRep, "Representation file for the four generators")
      ->required();
  cmdCovWe->add_option("--form", covWeForm, "Which V_t reading to assemble")
      ->check(CLI::IsMember({"literal", "quadratic", "both"}));
  cmdCovWe->callback([&] {
    out.jsonMode = covWeArgs.format == "json";
    WeRepresentation rep = loadInput([&] { return parseWeRepresentationFile(readFile(covWeRep)); });
    std::vector<WeForm> forms;
    if (covWeForm == "literal" || covWeForm == "both") forms.push_back(WeForm::Literal);
    if (covWeForm == "quadratic" || covWeForm == "both") forms.push_back(WeForm::QuadraticB);
    bool allFlat = true;
    bool relationsHold = true;
    out.payload["forms"] = json::array();
    for (WeForm form : forms) {
      WeAnsatzResult result = compute(
          [&] { return weAnsatz(rep.a, rep.b, rep.c, rep.d, rep.fiberNames, form); });
      const JetContext& ctx = result.covering.context();
      auto residuals = compute([&] { return checkFlatness(result.covering); });
      bool flat = allZero(residuals);
      allFlat = allFlat && flat;
      relationsHold = relationsHold && result.relationsHold;
      json formJson{{"form", toString(form)},
                    {"relations-hold", result.relationsHold},
                    {"flat", flat}};
      formJson["V_x"] = exprListJson(result.covering.field(0).coeffs, ctx);
      formJson["V_t"] = exprListJson(result.covering.field(1).coeffs, ctx);
      json rs = json::array();
      out.line("form: " + toString(form));
      out.line("  relations hold: " + std::string(result.relationsHold ? "yes" : "no"));
      for (const auto& [name, coeffs] : result.relationResiduals) {
        if (!out.jsonMode) {
          bool zero = true;
          for (const JetExpr& c : coeffs) zero = zero && c.isZero();
          if (!zero) out.line("  relation " + name + " = " + renderExprList(coeffs, ctx));
        }
      }
      for (const FlatnessResidual& r : residuals) {
        rs.push_back({{"fiber", ctx.fiberName(r.fiber)}, {"value", toString(r.value, ctx)}});
        out.line("  flatness residual[" + ctx.fiberName(r.fiber) +
                 "]: " + toString(r.value, ctx));
      }
      formJson["residuals"] = rs;
      out.payload["forms"].push_back(formJson);
      out.line("  flat: " + std::string(flat ? "yes" : "no"));
    }
    if (!allFlat || !relationsHold) exitCode = kExitDomain;
  });

  CommonArgs covNlArgs;
  std::string covNlFile, covNlPhi, covNlPsi;
  auto* cmdCovNl = cmdCov->add_subcommand("nonlocal", "Nonlocal symmetry residuals");
  addFormatFlag(cmdCovNl, covNlArgs);
  cmdCovNl->add_option("--file", covNlFile)->required();
  cmdCovNl->add_option("--phi", covNlPhi, "Components for the dependent variables")->required();
  cmdCovNl->add_option("--psi", covNlPsi, "Components for the fiber coordinates")->required();
  cmdCovNl->callback([&] {
    out.jsonMode = covNlArgs.format == "json";
    Covering cov = loadInput([&] { return parseCoveringFile(readFile(covNlFile)); });
    const JetContext& ctx = cov.context();
    GeneratingFunction phi = loadInput([&] { return parseExprList(covNlPhi, ctx); });
    std::vector<JetExpr> psi = loadInput([&] { return parseExprList(covNlPsi, ctx); });
    NonlocalSymmetryReport report =
        compute([&] { return nonlocalSymmetryResidual(cov, phi, psi); });
    out.payload["determining"] = exprListJson(report.determining, ctx);
    json compat = json::array();
    for (const auto& c : report.compatibility) {
      compat.push_back({{"i", ctx.independentName(c.i)},
                        {"fiber", ctx.fiberName(c.fiber)},
                        {"value", toString(c.value, ctx)}});
      out.line("compatibility[" + ctx.independentName(c.i) + "][" + ctx.fiberName(c.fiber) +
               "]: " + toString(c.value, ctx));
    }
    out.payload["compatibility"] = compat;
    out.payload["nonlocal-symmetry"] = report.allZero;
    out.line("determining: " + renderExprList(report.determining, ctx));
    out.line(std::string("nonlocal symmetry: ") + (report.allZero ? "yes" : "no"));
    if (!report.allZero) exitCode = kExitDomain;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << "error[E_USAGE]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CliError& e) {
    std::cerr << "error[" << e.tag << "]: " << e.message << "\n";
    return e.code;
  }

  out.emit();
  return exitCode;
}
