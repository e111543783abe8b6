#include "determining.hpp"

#include "jetcalc/errors.hpp"

namespace jetcalc::detail {

std::vector<GeneratingFunction> solveLinearDetermining(
    const PdeSystem& sys, const AnsatzSpec& spec,
    const std::function<std::vector<JetExpr>(const GeneratingFunction&)>& residual) {
  const int m = sys.context().numDependent();
  std::vector<Monomial> monomials = ansatzMonomials(sys, spec);
  if (static_cast<long>(monomials.size()) * m > spec.monomialLimit)
    throw DomainError("ansatz size limit exceeded");

  const int cols = static_cast<int>(monomials.size()) * m;

  // Residual of each unit ansatz member, flattened to polynomials. A column
  // is (component j, monomial index a); rational residuals are put over a
  // common denominator per residual row block first.
  std::vector<std::vector<JetExpr>> unitResiduals(static_cast<size_t>(cols));
  int l = 0;
  for (int j = 0; j < m; ++j) {
    for (size_t a = 0; a < monomials.size(); ++a) {
      GeneratingFunction unit(static_cast<size_t>(m), JetExpr::zero());
      Poly p;
      p.addTerm(monomials[a], Rational(1));
      unit[static_cast<size_t>(j)] = JetExpr::fromPoly(std::move(p));
      auto res = residual(unit);
      l = static_cast<int>(res.size());
      unitResiduals[static_cast<size_t>(j) * monomials.size() + a] = std::move(res);
    }
  }

  std::map<std::pair<int, Monomial>, std::vector<Rational>,
           decltype([](const auto& x, const auto& y) {
             if (x.first != y.first) return x.first < y.first;
             return MonomialLess{}(x.second, y.second);
           })>
      rowTable;

  for (int s = 0; s < l; ++s) {
    // Common denominator for residual component s across all columns.
    Poly common = Poly::one();
    for (int col = 0; col < cols; ++col) {
      const Poly& den = unitResiduals[static_cast<size_t>(col)][static_cast<size_t>(s)]
                            .denominator();
      if (!den.isOne()) common = polyDivExact(common * den, polyGcd(common, den));
    }
    for (int col = 0; col < cols; ++col) {
      const JetExpr& r = unitResiduals[static_cast<size_t>(col)][static_cast<size_t>(s)];
      Poly flat = r.numerator() * polyDivExact(common, r.denominator());
      for (const auto& [mon, coeff] : flat.terms()) {
        auto [it, inserted] = rowTable.try_emplace(
            std::make_pair(s, mon), std::vector<Rational>(static_cast<size_t>(cols)));
        it->second[static_cast<size_t>(col)] = coeff;
      }
    }
  }

  RationalMatrix mat(cols);
  for (auto& [key, row] : rowTable) mat.addRow(std::move(row));

  std::vector<GeneratingFunction> basis;
  for (const std::vector<Rational>& v : mat.nullspaceBasis()) {
    GeneratingFunction phi(static_cast<size_t>(m), JetExpr::zero());
    for (int j = 0; j < m; ++j) {
      Poly p;
      for (size_t a = 0; a < monomials.size(); ++a) {
        const Rational& c = v[static_cast<size_t>(j) * monomials.size() + a];
        if (sign(c) != 0) p.addTerm(monomials[a], c);
      }
      phi[static_cast<size_t>(j)] = JetExpr::fromPoly(std::move(p));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

}  // namespace jetcalc::detail
