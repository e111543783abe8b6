#include "jetcalc/linop.hpp"

#include "jetcalc/errors.hpp"

namespace jetcalc {

namespace {

// All tau with 0 <= tau <= sigma componentwise.
std::vector<MultiIndex> subIndices(const MultiIndex& sigma) {
  std::vector<MultiIndex> out{MultiIndex::zero(sigma.size())};
  for (int i = 0; i < sigma.size(); ++i) {
    std::vector<MultiIndex> next;
    for (const MultiIndex& t : out)
      for (int k = 0; k <= sigma[i]; ++k) {
        MultiIndex b = t;
        for (int r = 0; r < k; ++r) b = b.bumped(i);
        next.push_back(b);
      }
    out = std::move(next);
  }
  return out;
}

Rational binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational multiBinomial(const MultiIndex& sigma, const MultiIndex& tau) {
  Rational r(1);
  for (int i = 0; i < sigma.size(); ++i) r *= binomial(sigma[i], tau[i]);
  return r;
}

}  // namespace

CDiffOp::CDiffOp(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw DomainError("operator shape must be positive");
  entries_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

CDiffOp CDiffOp::identity(int n, int size) {
  CDiffOp op(size, size);
  for (int i = 0; i < size; ++i)
    op.addTerm(i, i, MultiIndex::zero(n), JetExpr::one());
  return op;
}

const PdeSystem& CDiffOp::system() const {
  if (!restricted_) throw DomainError("operator is not restricted");
  return *restricted_;
}

const CDiffOp::Entry& CDiffOp::entry(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw DomainError("operator entry out of range");
  return entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
                  static_cast<size_t>(c)];
}

void CDiffOp::addTerm(int r, int c, const MultiIndex& sigma, const JetExpr& coeff) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw DomainError("operator entry out of range");
  if (coeff.isZero()) return;
  Entry& e = entries_[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
                      static_cast<size_t>(c)];
  auto [it, inserted] = e.emplace(sigma, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.isZero()) e.erase(it);
  }
}

bool CDiffOp::isZero() const {
  for (const Entry& e : entries_)
    if (!e.empty()) return false;
  return true;
}

bool CDiffOp::operator==(const CDiffOp& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

CDiffOp CDiffOp::operator+(const CDiffOp& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("operator shape mismatch");
  CDiffOp r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      for (const auto& [sigma, coeff] : o.entry(i, j)) r.addTerm(i, j, sigma, coeff);
  return r;
}

CDiffOp CDiffOp::operator-(const CDiffOp& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("operator shape mismatch");
  CDiffOp r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      for (const auto& [sigma, coeff] : o.entry(i, j)) r.addTerm(i, j, sigma, -coeff);
  return r;
}

CDiffOp CDiffOp::leftMultiplied(const JetExpr& f) const {
  CDiffOp r(rows_, cols_);
  r.restricted_ = restricted_;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      for (const auto& [sigma, coeff] : entry(i, j)) r.addTerm(i, j, sigma, f * coeff);
  return r;
}

CDiffOp linearize(const std::vector<JetExpr>& F, int numIndependent, int numDependent) {
  if (F.empty()) throw DomainError("cannot linearize an empty tuple");
  CDiffOp op(static_cast<int>(F.size()), numDependent);
  for (size_t s = 0; s < F.size(); ++s) {
    if (F[s].mentionsKind(CoordKind::Nonlocal))
      throw DomainError("linearization of a nonlocal expression");
    for (const Coordinate& c : F[s].jetCoordinates()) {
      if (c.index() >= numDependent)
        throw DomainError("expression mentions an undeclared dependent variable");
      if (c.sigma().size() != numIndependent)
        throw DomainError("jet multi-index length does not match context");
      op.addTerm(static_cast<int>(s), c.index(), c.sigma(), F[s].partial(c));
    }
  }
  return op;
}

std::vector<JetExpr> apply(const CDiffOp& op, const GeneratingFunction& phi) {
  if (static_cast<int>(phi.size()) != op.cols())
    throw DomainError("operator/argument shape mismatch");
  std::vector<JetExpr> out;
  out.reserve(static_cast<size_t>(op.rows()));
  for (int s = 0; s < op.rows(); ++s) {
    JetExpr acc;
    for (int j = 0; j < op.cols(); ++j) {
      for (const auto& [sigma, coeff] : op.entry(s, j)) {
        JetExpr d = op.isRestricted()
                        ? op.system().restrictedTotalDerivativeMulti(
                              phi[static_cast<size_t>(j)], sigma)
                        : totalDerivativeMulti(phi[static_cast<size_t>(j)], sigma);
        acc += coeff * d;
      }
    }
    if (op.isRestricted()) acc = op.system().reduce(acc);
    out.push_back(std::move(acc));
  }
  return out;
}

CDiffOp adjoint(const CDiffOp& op) {
  CDiffOp r(op.cols(), op.rows());
  r.restricted_ = op.restricted_;
  for (int s = 0; s < op.rows(); ++s) {
    for (int j = 0; j < op.cols(); ++j) {
      for (const auto& [sigma, a] : op.entry(s, j)) {
        // (a D_sigma)*(p) = (-1)^{|sigma|} D_sigma(a p)
        //                 = (-1)^{|sigma|} sum_{tau<=sigma} C(sigma,tau)
        //                   D_{sigma-tau}(a) D_tau(p)
        Rational signFactor((sigma.order() % 2 == 0) ? 1 : -1);
        for (const MultiIndex& tau : subIndices(sigma)) {
          JetExpr coeff =
              totalDerivativeMulti(a, sigma - tau, FiberRule::Constant)
                  .scaled(signFactor * multiBinomial(sigma, tau));
          if (op.isRestricted()) coeff = op.system().reduce(coeff);
          r.addTerm(j, s, tau, coeff);
        }
      }
    }
  }
  return r;
}

CDiffOp compose(const CDiffOp& a, const CDiffOp& b) {
  if (a.cols() != b.rows()) throw DomainError("operator shapes do not chain");
  if (a.isRestricted() || b.isRestricted())
    throw DomainError("composition is defined for free-jet operators");
  CDiffOp r(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      for (const auto& [sigma, f] : a.entry(i, k)) {
        for (int j = 0; j < b.cols(); ++j) {
          for (const auto& [tau, g] : b.entry(k, j)) {
            // f D_sigma o g D_tau = sum_{rho<=sigma} C(sigma,rho)
            //   f D_{sigma-rho}(g) D_{rho+tau}
            for (const MultiIndex& rho : subIndices(sigma)) {
              JetExpr coeff = f * totalDerivativeMulti(g, sigma - rho)
                                      .scaled(multiBinomial(sigma, rho));
              r.addTerm(i, j, rho + tau, coeff);
            }
          }
        }
      }
    }
  }
  return r;
}

CDiffOp restrictOp(const CDiffOp& op, const PdeSystem& sys) {
  if (op.isRestricted()) throw DomainError("operator is already restricted");
  CDiffOp r(op.rows(), op.cols());
  for (int i = 0; i < op.rows(); ++i)
    for (int j = 0; j < op.cols(); ++j)
      for (const auto& [sigma, coeff] : op.entry(i, j))
        r.addTerm(i, j, sigma, sys.reduce(coeff));
  r.restricted_ = sys;
  return r;
}

}  // namespace jetcalc
