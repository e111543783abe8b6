#include "jetcalc/poly.hpp"

#include <algorithm>

#include "jetcalc/errors.hpp"

namespace jetcalc {

int monomialDegree(const Monomial& m) {
  int d = 0;
  for (const auto& [c, e] : m) d += e;
  return d;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = monomialDegree(a), db = monomialDegree(b);
  if (da != db) return da < db;
  // Walk from the largest coordinate downward; the monomial whose top
  // coordinate is larger (or, at an equal coordinate, whose exponent is
  // larger) is the larger monomial.
  auto ia = a.rbegin(), ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return false;  // equal degree and common suffix exhausted together
}

Monomial monomialMul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      r.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      r.push_back(*ib++);
    } else {
      r.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return r;
}

bool monomialDivides(const Monomial& a, const Monomial& b) {
  auto ib = b.begin();
  for (const auto& [c, e] : a) {
    while (ib != b.end() && ib->first < c) ++ib;
    if (ib == b.end() || !(ib->first == c) || ib->second < e) return false;
  }
  return true;
}

Monomial monomialQuotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  auto ia = a.begin();
  for (const auto& [c, e] : b) {
    int sub = 0;
    if (ia != a.end() && ia->first == c) {
      sub = ia->second;
      ++ia;
    }
    if (sub > e) throw DomainError("monomial quotient is not a monomial");
    if (e - sub > 0) r.emplace_back(c, e - sub);
  }
  if (ia != a.end()) throw DomainError("monomial quotient is not a monomial");
  return r;
}

Poly::Poly(Rational c) {
  if (sign(c) != 0) terms_.emplace(Monomial{}, std::move(c));
}

Poly::Poly(const Coordinate& c) { terms_.emplace(Monomial{{c, 1}}, Rational(1)); }

bool Poly::isOne() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second == 1;
}

bool Poly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

const Monomial& Poly::leadingMonomial() const {
  if (isZero()) throw DomainError("zero polynomial has no leading monomial");
  return terms_.rbegin()->first;
}

const Rational& Poly::leadingCoefficient() const {
  if (isZero()) throw DomainError("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

void Poly::addTerm(const Monomial& m, const Rational& c) {
  if (sign(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sign(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.addTerm(monomialMul(ma, mb), ca * cb);
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (sign(c) == 0) return Poly();
  Poly r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw DomainError("polynomial power must be non-negative");
  Poly r = Poly::one();
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Poly Poly::partial(const Coordinate& c) const {
  Poly r;
  for (const auto& [m, coef] : terms_) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i].first == c) {
        Monomial d = m;
        if (d[i].second == 1)
          d.erase(d.begin() + static_cast<long>(i));
        else
          --d[i].second;
        r.addTerm(d, coef * m[i].second);
        break;
      }
    }
  }
  return r;
}

Poly Poly::antiderivative(const Coordinate& c) const {
  Poly r;
  for (const auto& [m, coef] : terms_) {
    bool found = false;
    Monomial b = m;
    for (auto& [mc, e] : b) {
      if (mc == c) {
        ++e;
        r.addTerm(b, coef / e);
        found = true;
        break;
      }
    }
    if (!found) {
      Monomial withc;
      bool placed = false;
      for (const auto& p : m) {
        if (!placed && c < p.first) {
          withc.emplace_back(c, 1);
          placed = true;
        }
        withc.push_back(p);
      }
      if (!placed) withc.emplace_back(c, 1);
      r.addTerm(withc, coef);
    }
  }
  return r;
}

int Poly::degreeIn(const Coordinate& c) const {
  int d = 0;
  for (const auto& [m, coef] : terms_)
    for (const auto& [mc, e] : m)
      if (mc == c) d = std::max(d, e);
  return d;
}

int Poly::totalDegree() const {
  int d = 0;
  for (const auto& [m, coef] : terms_) d = std::max(d, monomialDegree(m));
  return d;
}

int Poly::jetOrder() const {
  int k = -1;
  for (const auto& [m, coef] : terms_)
    for (const auto& [c, e] : m)
      if (c.isJet()) k = std::max(k, c.jetOrder());
  return k;
}

bool Poly::mentions(const Coordinate& c) const { return degreeIn(c) > 0; }

bool Poly::mentionsKind(CoordKind k) const {
  for (const auto& [m, coef] : terms_)
    for (const auto& [c, e] : m)
      if (c.kind() == k) return true;
  return false;
}

std::set<Coordinate> Poly::coordinates() const {
  std::set<Coordinate> s;
  for (const auto& [m, coef] : terms_)
    for (const auto& [c, e] : m) s.insert(c);
  return s;
}

Poly polyDivExact(const Poly& a, const Poly& b) {
  if (b.isZero()) throw DomainError("polynomial division by zero");
  Poly q;
  Poly r = a;
  const Monomial& lb = b.leadingMonomial();
  const Rational& cb = b.leadingCoefficient();
  while (!r.isZero()) {
    const Monomial& lr = r.leadingMonomial();
    if (!monomialDivides(lb, lr)) throw DomainError("polynomial division is not exact");
    Monomial t = monomialQuotient(lr, lb);
    Rational c = r.leadingCoefficient() / cb;
    Poly piece;
    piece.addTerm(t, c);
    q += piece;
    r -= piece * b;
  }
  return q;
}

Rational rationalContent(const Poly& p) {
  if (p.isZero()) throw DomainError("content of the zero polynomial");
  Integer g(0), l(1);
  for (const auto& [m, c] : p.terms()) {
    Integer num = abs(c.get_num());
    Integer den = c.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  Rational content = ratio(g, l);
  if (sign(p.leadingCoefficient()) < 0) content = -content;
  return content;
}

namespace {

// Recursive view of a polynomial in one main coordinate: degree -> coefficient
// polynomial in the remaining coordinates.
using RecPoly = std::map<int, Poly>;

RecPoly toRec(const Poly& p, const Coordinate& v) {
  RecPoly r;
  for (const auto& [m, c] : p.terms()) {
    int dv = 0;
    Monomial rest;
    for (const auto& [mc, e] : m) {
      if (mc == v)
        dv = e;
      else
        rest.emplace_back(mc, e);
    }
    r[dv].addTerm(rest, c);
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.isZero() ? r.erase(it) : std::next(it);
  return r;
}

Poly fromRec(const RecPoly& r, const Coordinate& v) {
  Poly p;
  for (const auto& [d, coef] : r) {
    Poly vp = d == 0 ? Poly::one() : Poly(v).pow(d);
    p += coef * vp;
  }
  return p;
}

int recDegree(const RecPoly& r) { return r.empty() ? -1 : r.rbegin()->first; }

const Poly& recLead(const RecPoly& r) { return r.rbegin()->second; }

RecPoly recMulPoly(const RecPoly& a, const Poly& f) {
  RecPoly r;
  for (const auto& [d, coef] : a) {
    Poly prod = coef * f;
    if (!prod.isZero()) r.emplace(d, std::move(prod));
  }
  return r;
}

RecPoly recSub(const RecPoly& a, const RecPoly& b) {
  RecPoly r = a;
  for (const auto& [d, coef] : b) {
    auto it = r.find(d);
    if (it == r.end()) {
      r.emplace(d, -coef);
    } else {
      it->second -= coef;
      if (it->second.isZero()) r.erase(it);
    }
  }
  return r;
}

// Shift degrees up by s and multiply by f.
RecPoly recShiftMul(const RecPoly& a, int s, const Poly& f) {
  RecPoly r;
  for (const auto& [d, coef] : a) {
    Poly prod = coef * f;
    if (!prod.isZero()) r.emplace(d + s, std::move(prod));
  }
  return r;
}

// Pseudo-remainder of a by b in the main coordinate.
RecPoly recPrem(RecPoly a, const RecPoly& b) {
  const Poly& lb = recLead(b);
  int db = recDegree(b);
  while (recDegree(a) >= db && !a.empty()) {
    int da = recDegree(a);
    Poly la = recLead(a);
    a = recSub(recMulPoly(a, lb), recShiftMul(b, da - db, la));
  }
  return a;
}

Poly primitiveIntegerPart(const Poly& p) {
  if (p.isZero()) return p;
  Rational c = rationalContent(p);
  return p.scaled(Rational(1) / c);
}

// Content of p with respect to v: gcd of the coefficient polynomials.
Poly contentWrt(const Poly& p, const Coordinate& v) {
  RecPoly r = toRec(p, v);
  Poly g;
  for (const auto& [d, coef] : r) {
    g = g.isZero() ? primitiveIntegerPart(coef) : polyGcd(g, coef);
    if (g.isOne()) break;
  }
  return g;
}

}  // namespace

Poly polyGcd(const Poly& a, const Poly& b) {
  if (a.isZero() && b.isZero()) return Poly::one();
  if (a.isZero()) return primitiveIntegerPart(b);
  if (b.isZero()) return primitiveIntegerPart(a);

  Poly pa = primitiveIntegerPart(a);
  Poly pb = primitiveIntegerPart(b);

  std::set<Coordinate> coords = pa.coordinates();
  for (const Coordinate& c : pb.coordinates()) coords.insert(c);
  if (coords.empty()) return Poly::one();

  // Main coordinate: the largest present. Typically the top derivative, in
  // which degrees are low.
  Coordinate v = *coords.rbegin();

  Poly ca = contentWrt(pa, v);
  Poly cb = contentWrt(pb, v);
  Poly ppa = polyDivExact(pa, ca);
  Poly ppb = polyDivExact(pb, cb);

  RecPoly ra = toRec(ppa, v);
  RecPoly rb = toRec(ppb, v);
  if (recDegree(ra) < recDegree(rb)) std::swap(ra, rb);

  Poly vpart = Poly::one();
  while (true) {
    RecPoly rem = recPrem(ra, rb);
    if (rem.empty()) {
      vpart = primitiveIntegerPart(fromRec(rb, v));
      vpart = polyDivExact(vpart, contentWrt(vpart, v));
      vpart = primitiveIntegerPart(vpart);
      break;
    }
    if (recDegree(rem) == 0) break;  // gcd has no v part
    ra = std::move(rb);
    Poly remPoly = fromRec(rem, v);
    remPoly = polyDivExact(remPoly, contentWrt(remPoly, v));
    rb = toRec(remPoly, v);
  }

  Poly g = polyGcd(ca, cb) * vpart;
  return primitiveIntegerPart(g);
}

}  // namespace jetcalc
