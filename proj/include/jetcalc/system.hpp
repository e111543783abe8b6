#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "jetcalc/context.hpp"
#include "jetcalc/jets.hpp"

namespace jetcalc {

// One equation in solved (orthonomic) form: leader jet coordinate = rhs.
struct PdeEquation {
  Coordinate leader;  // a Jet coordinate
  JetExpr rhs;
};

// Lex ranking on jet coordinates in which derivatives in later-declared
// independent variables dominate (so u_t outranks every pure x-derivative
// when the variables are declared (x, t)); dependent index breaks ties.
// Compatible with differentiation, which grounds the reduction.
bool rankingLess(const Coordinate& a, const Coordinate& b);

// Solved-form PDE system over a JetContext. Validated on construction:
// leaders pairwise distinct and non-overlapping, right-hand sides in internal
// coordinates and ranking-lower than their leaders. Immutable; copies share
// the reduction memo.
class PdeSystem {
 public:
  PdeSystem(JetContext ctx, std::vector<PdeEquation> equations);

  const JetContext& context() const { return ctx_; }
  const std::vector<PdeEquation>& equations() const { return eqs_; }
  int size() const { return static_cast<int>(eqs_.size()); }

  // F_s = leader_s - rhs_s as a free-jet expression.
  JetExpr equationExpression(int s) const;
  std::vector<JetExpr> equationExpressions() const;

  // Internal (parametric) coordinates are those that are not a
  // D_sigma-consequence of any leader. Non-jet coordinates are internal.
  bool isInternal(const Coordinate& c) const;

  // For a leader-consequence coordinate: the equation index and the sigma
  // with c = leader_s + sigma (first matching equation in declared order).
  std::optional<std::pair<int, MultiIndex>> leaderConsequence(const Coordinate& c) const;

  // D_sigma(leader_s - rhs_s) as a free-jet expression, not reduced.
  JetExpr prolongEquation(int s, const MultiIndex& sigma) const;

  // Normal form of e modulo the relations D_sigma F_s = 0: every
  // leader-consequence coordinate is replaced by the reduced form of the
  // corresponding rhs derivative until only internal coordinates remain.
  // Fiber coordinates pass through untouched.
  JetExpr reduce(const JetExpr& e) const;

  // D-bar_i(e) = reduce(D_i(reduce(e))).
  JetExpr restrictedTotalDerivative(const JetExpr& e, int i,
                                    FiberRule rule = FiberRule::Reject) const;
  JetExpr restrictedTotalDerivativeMulti(const JetExpr& e, const MultiIndex& sigma,
                                         FiberRule rule = FiberRule::Reject) const;

 private:
  JetExpr reducedCoordinate(const Coordinate& c) const;

  JetContext ctx_;
  std::vector<PdeEquation> eqs_;

  struct Memo {
    std::mutex mu;
    std::map<Coordinate, JetExpr> table;
  };
  std::shared_ptr<Memo> memo_;
};

}  // namespace jetcalc
