#include "jetcalc/system.hpp"

#include "jetcalc/errors.hpp"
#include "jetcalc/parser.hpp"

namespace jetcalc {

bool rankingLess(const Coordinate& a, const Coordinate& b) {
  if (!a.isJet() || !b.isJet()) throw DomainError("ranking compares jet coordinates");
  const MultiIndex& sa = a.sigma();
  const MultiIndex& sb = b.sigma();
  for (int i = sa.size() - 1; i >= 0; --i)
    if (sa[i] != sb[i]) return sa[i] < sb[i];
  return a.index() < b.index();
}

PdeSystem::PdeSystem(JetContext ctx, std::vector<PdeEquation> equations)
    : ctx_(std::move(ctx)), eqs_(std::move(equations)), memo_(std::make_shared<Memo>()) {
  if (eqs_.empty()) throw DomainError("a PDE system needs at least one equation");
  for (const PdeEquation& eq : eqs_) {
    if (!eq.leader.isJet()) throw DomainError("equation leader must be a jet coordinate");
    ctx_.check(eq.leader);
    if (eq.rhs.mentionsKind(CoordKind::Nonlocal))
      throw DomainError("equation right-hand side mentions a fiber coordinate");
    for (const Coordinate& c : eq.rhs.coordinates()) ctx_.check(c);
  }
  for (size_t s = 0; s < eqs_.size(); ++s) {
    for (size_t r = 0; r < eqs_.size(); ++r) {
      if (r == s) continue;
      const Coordinate& ls = eqs_[s].leader;
      const Coordinate& lr = eqs_[r].leader;
      if (ls == lr && r < s)
        throw DomainError("duplicate leader '" + ctx_.coordinateName(ls) + "'");
      if (ls.index() == lr.index() && ls.sigma().dominates(lr.sigma()) && !(ls == lr))
        throw DomainError("overlapping leaders: '" + ctx_.coordinateName(ls) +
                          "' is a derivative of '" + ctx_.coordinateName(lr) + "'");
    }
  }
  for (const PdeEquation& eq : eqs_) {
    for (const Coordinate& c : eq.rhs.jetCoordinates()) {
      if (!isInternal(c))
        throw DomainError("right-hand side of '" + ctx_.coordinateName(eq.leader) +
                          "' mentions the leader consequence '" + ctx_.coordinateName(c) +
                          "'");
      if (!rankingLess(c, eq.leader))
        throw DomainError("right-hand side of '" + ctx_.coordinateName(eq.leader) +
                          "' is not ranking-lower: contains '" + ctx_.coordinateName(c) +
                          "'");
    }
  }
}

JetExpr PdeSystem::equationExpression(int s) const {
  if (s < 0 || s >= size()) throw DomainError("equation index out of range");
  const PdeEquation& eq = eqs_[static_cast<size_t>(s)];
  return JetExpr::coordinate(eq.leader) - eq.rhs;
}

std::vector<JetExpr> PdeSystem::equationExpressions() const {
  std::vector<JetExpr> f;
  f.reserve(eqs_.size());
  for (int s = 0; s < size(); ++s) f.push_back(equationExpression(s));
  return f;
}

bool PdeSystem::isInternal(const Coordinate& c) const {
  if (!c.isJet()) return true;
  for (const PdeEquation& eq : eqs_)
    if (c.index() == eq.leader.index() && c.sigma().dominates(eq.leader.sigma()))
      return false;
  return true;
}

std::optional<std::pair<int, MultiIndex>> PdeSystem::leaderConsequence(
    const Coordinate& c) const {
  if (!c.isJet()) return std::nullopt;
  for (size_t s = 0; s < eqs_.size(); ++s) {
    const Coordinate& leader = eqs_[s].leader;
    if (c.index() == leader.index() && c.sigma().dominates(leader.sigma()))
      return std::make_pair(static_cast<int>(s), c.sigma() - leader.sigma());
  }
  return std::nullopt;
}

JetExpr PdeSystem::prolongEquation(int s, const MultiIndex& sigma) const {
  return totalDerivativeMulti(equationExpression(s), sigma);
}

JetExpr PdeSystem::reducedCoordinate(const Coordinate& c) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->table.find(c);
    if (it != memo_->table.end()) return it->second;
  }
  auto cons = leaderConsequence(c);
  if (!cons) throw DomainError("coordinate is internal");
  const auto& [s, sigma] = *cons;
  JetExpr r;
  if (sigma.isZero()) {
    r = eqs_[static_cast<size_t>(s)].rhs;
  } else {
    int i = 0;
    while (sigma[i] == 0) ++i;
    JetExpr prev = reducedCoordinate(Coordinate::jet(c.index(), c.sigma().lowered(i)));
    r = reduce(totalDerivative(prev, i, FiberRule::Constant));
  }
  std::lock_guard<std::mutex> lock(memo_->mu);
  return memo_->table.emplace(c, std::move(r)).first->second;
}

JetExpr PdeSystem::reduce(const JetExpr& e) const {
  std::map<Coordinate, JetExpr> bindings;
  for (const Coordinate& c : e.jetCoordinates())
    if (!isInternal(c)) bindings.emplace(c, reducedCoordinate(c));
  if (bindings.empty()) return e;
  return e.substitute(bindings);
}

JetExpr PdeSystem::restrictedTotalDerivative(const JetExpr& e, int i, FiberRule rule) const {
  return reduce(totalDerivative(reduce(e), i, rule));
}

JetExpr PdeSystem::restrictedTotalDerivativeMulti(const JetExpr& e, const MultiIndex& sigma,
                                                  FiberRule rule) const {
  JetExpr r = reduce(e);
  for (int i = 0; i < sigma.size(); ++i)
    for (int k = 0; k < sigma[i]; ++k) r = reduce(totalDerivative(r, i, rule));
  return r;
}

}  // namespace jetcalc
