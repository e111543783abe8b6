#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "jetcalc/coordinate.hpp"
#include "jetcalc/rational.hpp"

namespace jetcalc {

// Power product of coordinates, sorted by coordinate, exponents >= 1.
using Monomial = std::vector<std::pair<Coordinate, int>>;

int monomialDegree(const Monomial& m);

// Graded lexicographic term order: total degree first, ties broken by the
// exponent of the largest coordinate present, walking downward. A genuine
// monomial order (1 is minimal, compatible with multiplication), which the
// exact-division and gcd routines rely on.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial monomialMul(const Monomial& a, const Monomial& b);
bool monomialDivides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomialQuotient(const Monomial& b, const Monomial& a);  // b / a

// Differential polynomial over Q in a fixed coordinate alphabet: a canonical
// sum of terms, no zero coefficients, monomials duplicate-free and totally
// ordered. The zero polynomial is the empty sum.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Poly() = default;
  explicit Poly(Rational c);
  explicit Poly(const Coordinate& c);

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rational(1)); }

  bool isZero() const { return terms_.empty(); }
  bool isOne() const;
  bool isConstant() const;  // zero or a single coordinate-free term

  const TermMap& terms() const { return terms_; }
  size_t termCount() const { return terms_.size(); }

  // Largest monomial and its coefficient; polynomial must be non-zero.
  const Monomial& leadingMonomial() const;
  const Rational& leadingCoefficient() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  Poly scaled(const Rational& c) const;
  Poly pow(int k) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator<(const Poly& o) const { return terms_ < o.terms_; }

  // Formal partial derivative treating all coordinates as independent symbols.
  Poly partial(const Coordinate& c) const;

  // Per-monomial antiderivative in a single coordinate (exponent bump).
  Poly antiderivative(const Coordinate& c) const;

  int degreeIn(const Coordinate& c) const;
  int totalDegree() const;
  int jetOrder() const;  // max |sigma| over jet coordinates; -1 if none
  bool mentions(const Coordinate& c) const;
  bool mentionsKind(CoordKind k) const;
  std::set<Coordinate> coordinates() const;

  void addTerm(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
};

// Exact quotient a / b; throws DomainError when b does not divide a.
Poly polyDivExact(const Poly& a, const Poly& b);

// Primitive positive gcd over Q[coordinates] (1 when both inputs are
// constants). Primitive-PRS Euclid with recursive contents.
Poly polyGcd(const Poly& a, const Poly& b);

// Signed rational c such that p / c has coprime integer coefficients and a
// positive leading one; p must be non-zero.
Rational rationalContent(const Poly& p);

}  // namespace jetcalc
