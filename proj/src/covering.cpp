#include "jetcalc/covering.hpp"

#include "jetcalc/errors.hpp"
#include "jetcalc/parser.hpp"

namespace jetcalc {

VerticalField verticalBracket(const VerticalField& x, const VerticalField& y) {
  if (x.coeffs.size() != y.coeffs.size())
    throw DomainError("vertical fields live on different fiber sets");
  const size_t r = x.coeffs.size();
  VerticalField out;
  out.coeffs.resize(r);
  for (size_t a = 0; a < r; ++a) {
    JetExpr acc;
    for (size_t b = 0; b < r; ++b) {
      Coordinate wb = Coordinate::nonlocal(static_cast<int>(b));
      acc += x.coeffs[b] * y.coeffs[a].partial(wb) - y.coeffs[b] * x.coeffs[a].partial(wb);
    }
    out.coeffs[a] = acc;
  }
  return out;
}

Covering::Covering(PdeSystem base, std::vector<VerticalField> fields)
    : base_(std::move(base)), fields_(std::move(fields)) {
  const JetContext& ctx = base_.context();
  if (static_cast<int>(fields_.size()) != ctx.numIndependent())
    throw DomainError("need one vertical field per independent variable");
  for (const VerticalField& f : fields_) {
    if (static_cast<int>(f.coeffs.size()) != ctx.numFiber())
      throw DomainError("vertical field needs one coefficient per fiber coordinate");
    for (const JetExpr& coeff : f.coeffs) {
      for (const Coordinate& c : coeff.coordinates()) {
        ctx.check(c);
        if (c.isJet() && !base_.isInternal(c))
          throw DomainError("vertical-field coefficient mentions the leader consequence '" +
                            ctx.coordinateName(c) + "'");
      }
    }
  }
}

const VerticalField& Covering::field(int i) const {
  if (i < 0 || i >= static_cast<int>(fields_.size()))
    throw DomainError("independent-variable index out of range");
  return fields_[static_cast<size_t>(i)];
}

JetExpr extendedTotalDerivative(const Covering& cov, const JetExpr& e, int i) {
  JetExpr r = cov.base().restrictedTotalDerivative(e, i, FiberRule::Constant);
  const VerticalField& v = cov.field(i);
  for (size_t a = 0; a < v.coeffs.size(); ++a) {
    JetExpr d = e.partial(Coordinate::nonlocal(static_cast<int>(a)));
    if (!d.isZero()) r += v.coeffs[a] * d;
  }
  return r;
}

std::vector<FlatnessResidual> checkFlatness(const Covering& cov) {
  const int n = cov.context().numIndependent();
  std::vector<FlatnessResidual> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a = 0; a < cov.numFiber(); ++a) {
        // [D-hat_i, D-hat_j](w_a) = D-hat_i(coeff^j_a) - D-hat_j(coeff^i_a)
        JetExpr value =
            extendedTotalDerivative(cov, cov.field(j).coeffs[static_cast<size_t>(a)], i) -
            extendedTotalDerivative(cov, cov.field(i).coeffs[static_cast<size_t>(a)], j);
        out.push_back({i, j, a, std::move(value)});
      }
    }
  }
  return out;
}

bool allZero(const std::vector<FlatnessResidual>& residuals) {
  for (const FlatnessResidual& r : residuals)
    if (!r.value.isZero()) return false;
  return true;
}

namespace {

JetExpr extendedDerivativeMulti(const Covering& cov, const JetExpr& e,
                                const MultiIndex& sigma) {
  JetExpr r = e;
  for (int i = 0; i < sigma.size(); ++i)
    for (int k = 0; k < sigma[i]; ++k) r = extendedTotalDerivative(cov, r, i);
  return r;
}

}  // namespace

NonlocalSymmetryReport nonlocalSymmetryResidual(const Covering& cov,
                                                const GeneratingFunction& phi,
                                                const std::vector<JetExpr>& psi) {
  const PdeSystem& sys = cov.base();
  const JetContext& ctx = cov.context();
  if (static_cast<int>(phi.size()) != ctx.numDependent())
    throw DomainError("phi needs one component per dependent variable");
  if (static_cast<int>(psi.size()) != ctx.numFiber())
    throw DomainError("psi needs one component per fiber coordinate");

  GeneratingFunction phiRed;
  for (const JetExpr& p : phi) phiRed.push_back(sys.reduce(p));
  std::vector<JetExpr> psiRed;
  for (const JetExpr& p : psi) psiRed.push_back(sys.reduce(p));

  NonlocalSymmetryReport report;

  // Extended determining residual: linearization coefficients restricted,
  // D-hat in place of D-bar.
  CDiffOp l = linearize(sys.equationExpressions(), ctx.numIndependent(),
                        ctx.numDependent());
  for (int s = 0; s < l.rows(); ++s) {
    JetExpr acc;
    for (int j = 0; j < l.cols(); ++j)
      for (const auto& [sigma, coeff] : l.entry(s, j))
        acc += sys.reduce(coeff) *
               extendedDerivativeMulti(cov, phiRed[static_cast<size_t>(j)], sigma);
    report.determining.push_back(std::move(acc));
  }

  // Linearized compatibility of the fiber relations: the extended
  // evolutionary derivation weights jets with D-hat_sigma(phi) and fiber
  // coordinates with psi.
  auto extendedEvolutionary = [&](const JetExpr& g) {
    JetExpr acc;
    for (const Coordinate& c : g.coordinates()) {
      if (c.isJet()) {
        acc += extendedDerivativeMulti(cov, phiRed[static_cast<size_t>(c.index())],
                                       c.sigma()) *
               g.partial(c);
      } else if (c.isNonlocal()) {
        acc += psiRed[static_cast<size_t>(c.index())] * g.partial(c);
      }
    }
    return acc;
  };

  for (int i = 0; i < ctx.numIndependent(); ++i) {
    for (int a = 0; a < ctx.numFiber(); ++a) {
      JetExpr value =
          extendedTotalDerivative(cov, psiRed[static_cast<size_t>(a)], i) -
          extendedEvolutionary(cov.field(i).coeffs[static_cast<size_t>(a)]);
      report.compatibility.push_back({i, a, std::move(value)});
    }
  }

  report.allZero = true;
  for (const JetExpr& r : report.determining) report.allZero = report.allZero && r.isZero();
  for (const auto& c : report.compatibility)
    report.allZero = report.allZero && c.value.isZero();
  return report;
}

std::string toString(WeForm form) {
  return form == WeForm::Literal ? "literal" : "quadratic";
}

WeAnsatzResult weAnsatz(const VerticalField& a, const VerticalField& b,
                        const VerticalField& c, const VerticalField& d,
                        const std::vector<std::string>& fiberNames, WeForm form) {
  const size_t r = fiberNames.size();
  for (const VerticalField* f : {&a, &b, &c, &d}) {
    if (f->coeffs.size() != r)
      throw DomainError("generator fields must live on the declared fiber set");
    for (const JetExpr& coeff : f->coeffs)
      for (const Coordinate& coord : coeff.coordinates())
        if (!coord.isNonlocal())
          throw DomainError("generator fields must be vertical (fiber coordinates only)");
  }

  JetContext ctx({"x", "t"}, {"u"}, fiberNames);
  const int n = 2;
  JetExpr u = JetExpr::coordinate(Coordinate::jet(0, MultiIndex::zero(n)));
  JetExpr u1 = JetExpr::coordinate(Coordinate::jet(0, MultiIndex({1, 0})));
  JetExpr u2 = JetExpr::coordinate(Coordinate::jet(0, MultiIndex({2, 0})));
  JetExpr u3 = JetExpr::coordinate(Coordinate::jet(0, MultiIndex({3, 0})));
  PdeSystem kdv(ctx, {{Coordinate::jet(0, MultiIndex({0, 1})), u * u1 + u3}});

  auto scaledField = [&](const VerticalField& f, const JetExpr& factor) {
    VerticalField out;
    out.coeffs.reserve(r);
    for (const JetExpr& coeff : f.coeffs) out.coeffs.push_back(factor * coeff);
    return out;
  };
  auto addFields = [&](const VerticalField& x, const VerticalField& y) {
    VerticalField out;
    out.coeffs.reserve(r);
    for (size_t k = 0; k < r; ++k) out.coeffs.push_back(x.coeffs[k] + y.coeffs[k]);
    return out;
  };

  VerticalField bc = verticalBracket(b, c);
  VerticalField cb = verticalBracket(c, b);
  VerticalField bcb = verticalBracket(b, cb);   // [B,[C,B]]
  VerticalField ccb = verticalBracket(c, cb);   // [C,[C,B]]

  // V_x = u^2 A + u B + C
  VerticalField vx = addFields(scaledField(a, u.pow(2)), addFields(scaledField(b, u), c));

  // V_t = 2 u u_2 A + u_2 B - u_1^2 A + u_1 [B,C] + 2/3 u^3 A
  //       + 1/2 (B + [B,[C,B]]) + u [C,[C,B]] + D,
  // with the first summand of the 1/2-term read as u^2 B in quadratic form.
  JetExpr half = JetExpr::constant(ratio(1, 2));
  VerticalField vt = scaledField(a, (u * u2).scaled(Rational(2)) - u1.pow(2) +
                                        u.pow(3).scaled(ratio(2, 3)));
  vt = addFields(vt, scaledField(b, u2));
  vt = addFields(vt, scaledField(bc, u1));
  vt = addFields(vt, scaledField(b, form == WeForm::Literal ? half : half * u.pow(2)));
  vt = addFields(vt, scaledField(bcb, half));
  vt = addFields(vt, scaledField(ccb, u));
  vt = addFields(vt, d);

  WeAnsatzResult result{Covering(kdv, {vx, vt}), {}, true};

  // Bracket relations the representation must satisfy:
  //   [A,B] = [A,C] = [C,D] = 0,  [B,D] + [C,[C,[C,B]]] = 0,
  //   [B,[B,[B,C]]] = 0,  [A,D] + 3/2 [B,[C,[C,B]]] = 0.
  VerticalField cccb = verticalBracket(c, verticalBracket(c, cb));  // [C,[C,[C,B]]]
  VerticalField bbbc = verticalBracket(b, verticalBracket(b, bc));  // [B,[B,[B,C]]]
  VerticalField rel4 = addFields(verticalBracket(b, d), cccb);
  VerticalField rel6 = addFields(verticalBracket(a, d),
                                 scaledField(verticalBracket(b, ccb),
                                             JetExpr::constant(ratio(3, 2))));

  auto pushRelation = [&](const std::string& name, const VerticalField& f) {
    result.relationResiduals.emplace_back(name, f.coeffs);
    for (const JetExpr& coeff : f.coeffs)
      if (!coeff.isZero()) result.relationsHold = false;
  };
  pushRelation("[A,B]", verticalBracket(a, b));
  pushRelation("[A,C]", verticalBracket(a, c));
  pushRelation("[C,D]", verticalBracket(c, d));
  pushRelation("[B,D]+[C,[C,[C,B]]]", rel4);
  pushRelation("[B,[B,[B,C]]]", bbbc);
  pushRelation("[A,D]+3/2*[B,[C,[C,B]]]", rel6);

  return result;
}

}  // namespace jetcalc
