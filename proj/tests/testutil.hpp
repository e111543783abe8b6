#pragma once

#include <random>

#include "jetcalc/io.hpp"
#include "jetcalc/linalg.hpp"
#include "jetcalc/parser.hpp"

namespace jetcalc::testutil {

inline JetContext xtu() { return JetContext({"x", "t"}, {"u"}); }

inline JetExpr coord(const JetContext& ctx, const std::string& name) {
  return parse(name, ctx);
}

// Seeded generator of random differential polynomials; `internalOf` filters
// jet coordinates through a system's internal-coordinate predicate.
class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  Rational rat(long lo = -6, long hi = 6) {
    long n = pick(lo, hi);
    return ratio(n == 0 ? 1 : n, pick(1, 3));
  }

  Coordinate coordinate(const JetContext& ctx, int maxOrder,
                        const PdeSystem* internalOf = nullptr, bool allowIndep = true) {
    while (true) {
      if (allowIndep && pick(0, 3) == 0)
        return Coordinate::independent(static_cast<int>(pick(0, ctx.numIndependent() - 1)));
      std::vector<int> ex(static_cast<size_t>(ctx.numIndependent()), 0);
      int order = static_cast<int>(pick(0, maxOrder));
      for (int k = 0; k < order; ++k)
        ++ex[static_cast<size_t>(pick(0, ctx.numIndependent() - 1))];
      Coordinate c = Coordinate::jet(static_cast<int>(pick(0, ctx.numDependent() - 1)),
                                     MultiIndex(ex));
      if (!internalOf || internalOf->isInternal(c)) return c;
    }
  }

  JetExpr poly(const JetContext& ctx, int maxOrder, int maxTerms = 3,
               const PdeSystem* internalOf = nullptr, bool allowIndep = true) {
    JetExpr e;
    long terms = pick(1, maxTerms);
    for (long t = 0; t < terms; ++t) {
      JetExpr term = JetExpr::constant(rat());
      long factors = pick(0, 2);
      for (long f = 0; f < factors; ++f)
        term *= JetExpr::coordinate(coordinate(ctx, maxOrder, internalOf, allowIndep))
                    .pow(static_cast<int>(pick(1, 2)));
      e += term;
    }
    return e;
  }

  // Random rational expression with a guaranteed non-zero denominator.
  JetExpr rational(const JetContext& ctx, int maxOrder) {
    JetExpr num = poly(ctx, maxOrder);
    JetExpr den;
    while (den.isZero()) den = poly(ctx, maxOrder, 2);
    return num / den;
  }

 private:
  std::mt19937_64 rng_;
};

inline bool allZero(const std::vector<JetExpr>& v) {
  for (const JetExpr& e : v)
    if (!e.isZero()) return false;
  return true;
}

}  // namespace jetcalc::testutil
