#include "jetcalc/expr.hpp"

#include "jetcalc/errors.hpp"

namespace jetcalc {

JetExpr JetExpr::coordinate(const Coordinate& c) {
  JetExpr e;
  e.num_ = Poly(c);
  return e;
}

JetExpr JetExpr::fromPoly(Poly p) {
  JetExpr e;
  e.num_ = std::move(p);
  return e;
}

JetExpr JetExpr::fraction(Poly num, Poly den) {
  if (den.isZero()) throw DomainError("zero denominator");
  JetExpr e;
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  e.reduce();
  return e;
}

Rational JetExpr::constantValue() const {
  if (!isConstant()) throw DomainError("expression is not constant");
  if (num_.isZero()) return Rational(0);
  return num_.terms().begin()->second;
}

void JetExpr::reduce() {
  if (num_.isZero()) {
    den_ = Poly::one();
    return;
  }
  if (!den_.isOne()) {
    Poly g = polyGcd(num_, den_);
    if (!g.isOne()) {
      num_ = polyDivExact(num_, g);
      den_ = polyDivExact(den_, g);
    }
    // Scale so the denominator is a primitive integer polynomial with a
    // positive leading coefficient; the numerator absorbs the factor.
    Rational c = rationalContent(den_);
    if (c != 1) {
      den_ = den_.scaled(Rational(1) / c);
      num_ = num_.scaled(Rational(1) / c);
    }
  }
}

JetExpr JetExpr::operator-() const {
  JetExpr r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

JetExpr JetExpr::operator+(const JetExpr& o) const {
  JetExpr r;
  if (den_.isOne() && o.den_.isOne()) {
    r.num_ = num_ + o.num_;
    return r;
  }
  r.num_ = num_ * o.den_ + o.num_ * den_;
  r.den_ = den_ * o.den_;
  r.reduce();
  return r;
}

JetExpr JetExpr::operator-(const JetExpr& o) const { return *this + (-o); }

JetExpr JetExpr::operator*(const JetExpr& o) const {
  JetExpr r;
  r.num_ = num_ * o.num_;
  if (den_.isOne() && o.den_.isOne()) return r;
  r.den_ = den_ * o.den_;
  r.reduce();
  return r;
}

JetExpr JetExpr::operator/(const JetExpr& o) const {
  if (o.isZero()) throw DomainError("zero denominator");
  JetExpr r;
  r.num_ = num_ * o.den_;
  r.den_ = den_ * o.num_;
  r.reduce();
  return r;
}

JetExpr JetExpr::pow(int k) const {
  if (k < 0) throw DomainError("exponent must be non-negative");
  JetExpr r = JetExpr::one();
  JetExpr base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

JetExpr JetExpr::scaled(const Rational& c) const {
  JetExpr r;
  r.num_ = num_.scaled(c);
  if (r.num_.isZero()) return r;
  r.den_ = den_;
  return r;
}

JetExpr JetExpr::partial(const Coordinate& c) const {
  if (den_.isOne()) return fromPoly(num_.partial(c));
  // (n/d)' = (n'd - nd') / d^2
  Poly n = num_.partial(c) * den_ - num_ * den_.partial(c);
  return fraction(std::move(n), den_ * den_);
}

namespace {

JetExpr evalPoly(const Poly& p, const std::map<Coordinate, JetExpr>& bindings) {
  JetExpr acc;
  for (const auto& [m, c] : p.terms()) {
    JetExpr term = JetExpr::constant(c);
    for (const auto& [coord, e] : m) {
      auto it = bindings.find(coord);
      JetExpr f = it != bindings.end() ? it->second : JetExpr::coordinate(coord);
      term *= f.pow(e);
    }
    acc += term;
  }
  return acc;
}

}  // namespace

JetExpr JetExpr::substitute(const std::map<Coordinate, JetExpr>& bindings) const {
  if (bindings.empty()) return *this;
  JetExpr n = evalPoly(num_, bindings);
  if (den_.isOne()) return n;
  JetExpr d = evalPoly(den_, bindings);
  if (d.isZero()) throw DomainError("substitution produced a zero denominator");
  return n / d;
}

int JetExpr::jetOrder() const {
  int k = num_.jetOrder();
  int kd = den_.jetOrder();
  return k > kd ? k : kd;
}

std::set<Coordinate> JetExpr::coordinates() const {
  std::set<Coordinate> s = num_.coordinates();
  for (const Coordinate& c : den_.coordinates()) s.insert(c);
  return s;
}

std::set<Coordinate> JetExpr::jetCoordinates() const {
  std::set<Coordinate> s;
  for (const Coordinate& c : coordinates())
    if (c.isJet()) s.insert(c);
  return s;
}

JetExpr normalize(const JetExpr& e) {
  return JetExpr::fraction(e.numerator(), e.denominator());
}

}  // namespace jetcalc
