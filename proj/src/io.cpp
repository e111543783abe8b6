#include "jetcalc/io.hpp"

#include <fstream>
#include <sstream>

#include "jetcalc/errors.hpp"
#include "jetcalc/parser.hpp"

namespace jetcalc {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> splitList(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct KeyValueLines {
  std::vector<std::pair<std::string, std::string>> entries;
};

KeyValueLines readKeyValues(const std::string& text) {
  KeyValueLines kv;
  std::istringstream is(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(is, line)) {
    ++lineNo;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value' on line " + std::to_string(lineNo));
    kv.entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return kv;
}

Coordinate parseLeader(const std::string& text, const JetContext& ctx) {
  JetExpr lhs = parse(text, ctx);
  const Poly& p = lhs.numerator();
  if (!lhs.isPolynomial() || p.termCount() != 1)
    throw ParseError("equation left-hand side must be a single jet coordinate: '" + text +
                     "'");
  const auto& [mon, coeff] = *p.terms().begin();
  if (mon.size() != 1 || mon[0].second != 1 || coeff != 1 || !mon[0].first.isJet())
    throw ParseError("equation left-hand side must be a single jet coordinate: '" + text +
                     "'");
  return mon[0].first;
}

struct ParsedBase {
  JetContext ctx;
  std::vector<PdeEquation> equations;
  KeyValueLines rest;  // non-system keys, in order
};

ParsedBase parseBase(const std::string& text, bool allowFibers) {
  KeyValueLines kv = readKeyValues(text);
  std::vector<std::string> indep, dep, fibers;
  std::vector<std::string> equationLines;
  KeyValueLines rest;
  for (const auto& [key, value] : kv.entries) {
    if (key == "independent")
      indep = splitList(value);
    else if (key == "dependent")
      dep = splitList(value);
    else if (key == "fiber" && allowFibers)
      fibers = splitList(value);
    else if (key == "equation")
      equationLines.push_back(value);
    else
      rest.entries.emplace_back(key, value);
  }
  if (indep.empty()) throw ParseError("missing 'independent = ...' declaration");
  if (dep.empty()) throw ParseError("missing 'dependent = ...' declaration");
  JetContext ctx(indep, dep, fibers);

  std::vector<PdeEquation> equations;
  for (const std::string& eqText : equationLines) {
    size_t eq = eqText.find('=');
    if (eq == std::string::npos)
      throw ParseError("equation must have the form 'lhs = rhs': '" + eqText + "'");
    Coordinate leader = parseLeader(trim(eqText.substr(0, eq)), ctx);
    JetExpr rhs = parse(trim(eqText.substr(eq + 1)), ctx);
    equations.push_back({leader, rhs});
  }
  if (equations.empty()) throw ParseError("missing 'equation = ...' declaration");
  return {std::move(ctx), std::move(equations), std::move(rest)};
}

}  // namespace

PdeSystem parseSystemFile(const std::string& text) {
  ParsedBase base = parseBase(text, /*allowFibers=*/false);
  if (!base.rest.entries.empty())
    throw ParseError("unknown key '" + base.rest.entries.front().first + "'");
  return PdeSystem(std::move(base.ctx), std::move(base.equations));
}

PdeSystem builtinSystem(const std::string& name) {
  auto make = [](const std::string& equation) {
    JetContext ctx({"x", "t"}, {"u"});
    Coordinate ut = Coordinate::jet(0, MultiIndex({0, 1}));
    return PdeSystem(ctx, {{ut, parse(equation, ctx)}});
  };
  if (name == "kdv") return make("u*u_x + u_xxx");
  if (name == "burgers") return make("u_xx + u*u_x");
  if (name == "heat") return make("u_xx");
  throw DomainError("unknown built-in system '" + name + "' (try burgers, kdv, heat)");
}

PdeSystem loadSystem(const std::string& nameOrPath) {
  if (nameOrPath == "kdv" || nameOrPath == "burgers" || nameOrPath == "heat")
    return builtinSystem(nameOrPath);
  return parseSystemFile(readFile(nameOrPath));
}

std::string renderSystemFile(const PdeSystem& sys) {
  const JetContext& ctx = sys.context();
  std::ostringstream os;
  os << "independent = ";
  for (int i = 0; i < ctx.numIndependent(); ++i)
    os << (i ? ", " : "") << ctx.independentName(i);
  os << "\ndependent = ";
  for (int j = 0; j < ctx.numDependent(); ++j)
    os << (j ? ", " : "") << ctx.dependentName(j);
  os << '\n';
  for (const PdeEquation& eq : sys.equations())
    os << "equation = " << ctx.coordinateName(eq.leader) << " = " << toString(eq.rhs, ctx)
       << '\n';
  return os.str();
}

Covering parseCoveringFile(const std::string& text) {
  ParsedBase base = parseBase(text, /*allowFibers=*/true);
  const JetContext& ctx = base.ctx;
  if (ctx.numFiber() == 0) throw ParseError("covering file needs a 'fiber = ...' declaration");

  std::vector<VerticalField> fields(
      static_cast<size_t>(ctx.numIndependent()),
      VerticalField{std::vector<JetExpr>(static_cast<size_t>(ctx.numFiber()))});

  for (const auto& [key, value] : base.rest.entries) {
    if (key.size() < 2 || key[0] != 'V' || key[1] != '_')
      throw ParseError("unknown key '" + key + "'");
    size_t open = key.find('[');
    size_t close = key.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw ParseError("vertical-field key must look like V_x[w]: '" + key + "'");
    std::string indepName = trim(key.substr(2, open - 2));
    std::string fiberName = trim(key.substr(open + 1, close - open - 1));
    auto i = ctx.independentIndex(indepName);
    if (!i) throw ParseError("unknown independent variable in '" + key + "'");
    auto a = ctx.fiberIndex(fiberName);
    if (!a) throw ParseError("unknown fiber coordinate in '" + key + "'");
    fields[static_cast<size_t>(*i)].coeffs[static_cast<size_t>(*a)] = parse(value, ctx);
  }

  PdeSystem sys(ctx, std::move(base.equations));
  return Covering(std::move(sys), std::move(fields));
}

WeRepresentation parseWeRepresentationFile(const std::string& text) {
  KeyValueLines kv = readKeyValues(text);
  std::vector<std::string> fibers;
  for (const auto& [key, value] : kv.entries)
    if (key == "fiber") fibers = splitList(value);
  if (fibers.empty()) throw ParseError("representation file needs a 'fiber = ...' declaration");

  JetContext ctx({"x", "t"}, {"u"}, fibers);
  const size_t r = fibers.size();
  WeRepresentation rep;
  rep.fiberNames = fibers;
  for (VerticalField* f : {&rep.a, &rep.b, &rep.c, &rep.d})
    f->coeffs.assign(r, JetExpr::zero());

  for (const auto& [key, value] : kv.entries) {
    if (key == "fiber") continue;
    size_t open = key.find('[');
    size_t close = key.find(']');
    if (open != 1 || close == std::string::npos)
      throw ParseError("generator key must look like A[w]: '" + key + "'");
    std::string fiberName = trim(key.substr(open + 1, close - open - 1));
    auto a = ctx.fiberIndex(fiberName);
    if (!a) throw ParseError("unknown fiber coordinate in '" + key + "'");
    VerticalField* target = nullptr;
    switch (key[0]) {
      case 'A': target = &rep.a; break;
      case 'B': target = &rep.b; break;
      case 'C': target = &rep.c; break;
      case 'D': target = &rep.d; break;
      default: throw ParseError("generator key must be one of A, B, C, D: '" + key + "'");
    }
    target->coeffs[static_cast<size_t>(*a)] = parse(value, ctx);
  }
  return rep;
}

RecursionOperator parseRecursionFile(const std::string& text, const JetContext& ctx) {
  RecursionOperator R;
  R.direction = 0;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;

    // Split on top-level '*' and classify the pieces: at most one D^k or
    // Dinv, expression factors multiply before (factor) or after (inner).
    std::vector<std::string> pieces;
    int depth = 0;
    std::string current;
    for (char ch : line) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == '*' && depth == 0) {
        pieces.push_back(trim(current));
        current.clear();
      } else {
        current += ch;
      }
    }
    pieces.push_back(trim(current));

    RecursionTerm term;
    bool seenOperator = false;
    JetExpr factor = JetExpr::one();
    JetExpr inner = JetExpr::one();
    for (const std::string& piece : pieces) {
      if (piece == "D" || (piece.size() > 2 && piece.compare(0, 2, "D^") == 0)) {
        if (seenOperator) throw ParseError("term has more than one operator: '" + line + "'");
        seenOperator = true;
        if (piece == "D") {
          term.derivativeOrder = 1;
        } else {
          try {
            term.derivativeOrder = std::stoi(piece.substr(2));
          } catch (const std::exception&) {
            throw ParseError("bad derivative order in '" + piece + "'");
          }
        }
        if (term.derivativeOrder < 0) throw ParseError("negative derivative order");
      } else if (piece == "Dinv") {
        if (seenOperator) throw ParseError("term has more than one operator: '" + line + "'");
        seenOperator = true;
        term.integral = true;
      } else if (!seenOperator) {
        factor *= parse(piece, ctx);
      } else {
        inner *= parse(piece, ctx);
      }
    }
    term.factor = factor;
    term.inner = inner;
    R.terms.push_back(std::move(term));
  }
  if (R.terms.empty()) throw ParseError("recursion-operator file has no terms");
  return R;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace jetcalc
