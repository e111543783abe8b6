#pragma once

#include <map>
#include <set>

#include "jetcalc/poly.hpp"

namespace jetcalc {

// Canonical differential-polynomial or rational expression over Q. Stored as
// a reduced pair numerator/denominator: gcd(num, den) trivial, denominator a
// primitive integer polynomial with positive leading coefficient (so plain
// polynomials always carry denominator 1). Immutable value type; two
// expressions denote the same function of the jet coordinates iff they
// compare equal.
class JetExpr {
 public:
  JetExpr() = default;  // zero
  explicit JetExpr(Rational c) : num_(std::move(c)) {}
  explicit JetExpr(long c) : num_(Rational(c)) {}

  static JetExpr zero() { return JetExpr(); }
  static JetExpr one() { return JetExpr(Rational(1)); }
  static JetExpr constant(Rational c) { return JetExpr(std::move(c)); }
  static JetExpr coordinate(const Coordinate& c);
  static JetExpr fromPoly(Poly p);
  // Builds num/den, reducing to canonical form. Throws on zero denominator.
  static JetExpr fraction(Poly num, Poly den);

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  bool isPolynomial() const { return den_.isOne(); }
  bool isConstant() const { return num_.isConstant() && den_.isOne(); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  // The constant value; expression must be constant.
  Rational constantValue() const;

  JetExpr operator-() const;
  JetExpr operator+(const JetExpr& o) const;
  JetExpr operator-(const JetExpr& o) const;
  JetExpr operator*(const JetExpr& o) const;
  JetExpr operator/(const JetExpr& o) const;  // throws on zero divisor
  JetExpr& operator+=(const JetExpr& o) { return *this = *this + o; }
  JetExpr& operator-=(const JetExpr& o) { return *this = *this - o; }
  JetExpr& operator*=(const JetExpr& o) { return *this = *this * o; }

  JetExpr pow(int k) const;  // k >= 0
  JetExpr scaled(const Rational& c) const;

  bool operator==(const JetExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const JetExpr& o) const { return !(*this == o); }
  bool operator<(const JetExpr& o) const {
    if (num_ == o.num_) return den_ < o.den_;
    return num_ < o.num_;
  }

  // d/dc by formal partial differentiation; quotient rule on rational pairs.
  JetExpr partial(const Coordinate& c) const;

  // Simultaneous capture-free substitution followed by canonicalization.
  // Throws DomainError when a denominator collapses to zero.
  JetExpr substitute(const std::map<Coordinate, JetExpr>& bindings) const;

  int jetOrder() const;  // max |sigma| over both parts; -1 if no jets
  bool mentionsKind(CoordKind k) const {
    return num_.mentionsKind(k) || den_.mentionsKind(k);
  }
  std::set<Coordinate> coordinates() const;
  std::set<Coordinate> jetCoordinates() const;

 private:
  void reduce();

  Poly num_;
  Poly den_ = Poly::one();
};

// Re-runs canonicalization from the raw parts. Values are canonical by
// construction, so this is the identity on every reachable JetExpr; it exists
// so the canonical-form invariants stay testable.
JetExpr normalize(const JetExpr& e);

}  // namespace jetcalc
