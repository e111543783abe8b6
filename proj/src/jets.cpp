#include "jetcalc/jets.hpp"

#include "jetcalc/errors.hpp"

namespace jetcalc {

JetExpr totalDerivative(const JetExpr& e, int i, FiberRule rule) {
  if (i < 0) throw DomainError("independent-variable index out of range");
  JetExpr r = e.partial(Coordinate::independent(i));
  for (const Coordinate& c : e.coordinates()) {
    if (c.isNonlocal()) {
      if (rule == FiberRule::Reject)
        throw DomainError("total derivative applied to a nonlocal coordinate");
      continue;
    }
    if (!c.isJet()) continue;
    if (i >= c.sigma().size()) throw DomainError("independent-variable index out of range");
    JetExpr d = e.partial(c);
    if (d.isZero()) continue;
    r += JetExpr::coordinate(c.bumped(i)) * d;
  }
  return r;
}

JetExpr totalDerivativeMulti(const JetExpr& e, const MultiIndex& sigma, FiberRule rule) {
  JetExpr r = e;
  for (int i = 0; i < sigma.size(); ++i)
    for (int k = 0; k < sigma[i]; ++k) r = totalDerivative(r, i, rule);
  return r;
}

JetExpr evolutionaryDerivation(const GeneratingFunction& phi, const JetExpr& e) {
  if (e.mentionsKind(CoordKind::Nonlocal))
    throw DomainError("evolutionary derivation applied to a nonlocal coordinate");
  JetExpr r;
  for (const Coordinate& c : e.jetCoordinates()) {
    if (c.index() >= static_cast<int>(phi.size()))
      throw DomainError("generating function has too few components");
    JetExpr d = e.partial(c);
    if (d.isZero()) continue;
    r += totalDerivativeMulti(phi[static_cast<size_t>(c.index())], c.sigma()) * d;
  }
  return r;
}

}  // namespace jetcalc
