#include "jetcalc/parser.hpp"

#include <cctype>
#include <sstream>

#include "jetcalc/errors.hpp"

namespace jetcalc {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const JetContext& ctx) : text_(text), ctx_(ctx) {}

  JetExpr run() {
    JetExpr e = parseExpr();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, static_cast<long>(pos_));
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  JetExpr parseExpr() {
    JetExpr e = parseTerm();
    while (true) {
      if (eat('+'))
        e += parseTerm();
      else if (eat('-'))
        e -= parseTerm();
      else
        return e;
    }
  }

  JetExpr parseTerm() {
    JetExpr e = parseFactor();
    while (true) {
      if (eat('*')) {
        e *= parseFactor();
      } else if (eat('/')) {
        size_t at = pos_;
        JetExpr d = parseFactor();
        if (d.isZero()) throw ParseError("division by zero", static_cast<long>(at));
        e = e / d;
      } else {
        return e;
      }
    }
  }

  JetExpr parseFactor() {
    bool negate = false;
    while (true) {
      if (eat('-'))
        negate = !negate;
      else if (eat('+'))
        ;
      else
        break;
    }
    JetExpr e = parsePower();
    return negate ? -e : e;
  }

  JetExpr parsePower() {
    JetExpr base = parsePrimary();
    if (eat('^')) {
      skipSpace();
      size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected a non-negative integer exponent", static_cast<long>(at));
      long k = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = k * 10 + (text_[pos_] - '0');
        if (k > 1000000) throw ParseError("exponent too large", static_cast<long>(at));
        ++pos_;
      }
      return base.pow(static_cast<int>(k));
    }
    return base;
  }

  JetExpr parsePrimary() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      JetExpr e = parseExpr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return parseNumber();
    if (std::isalpha(static_cast<unsigned char>(ch))) return parseCoordinate();
    fail(std::string("unexpected character '") + ch + "'");
  }

  JetExpr parseNumber() {
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Integer v(text_.substr(start, pos_ - start));
    return JetExpr::constant(Rational(v));
  }

  JetExpr parseCoordinate() {
    size_t start = pos_;
    std::string head;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      head += text_[pos_++];

    std::string suffix;
    bool hasSuffix = false;
    if (pos_ < text_.size() && text_[pos_] == '_') {
      hasSuffix = true;
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '{') {
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '}') suffix += text_[pos_++];
        if (pos_ >= text_.size()) fail("unterminated '{' in derivative suffix");
        ++pos_;  // '}'
      } else {
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
          suffix += text_[pos_++];
      }
      if (suffix.empty())
        throw ParseError("empty derivative suffix", static_cast<long>(start));
    }

    if (!hasSuffix) {
      if (auto i = ctx_.independentIndex(head))
        return JetExpr::coordinate(Coordinate::independent(*i));
      if (auto j = ctx_.dependentIndex(head))
        return JetExpr::coordinate(
            Coordinate::jet(*j, MultiIndex::zero(ctx_.numIndependent())));
      if (auto a = ctx_.fiberIndex(head))
        return JetExpr::coordinate(Coordinate::nonlocal(*a));
      throw ParseError("undeclared identifier '" + head + "'", static_cast<long>(start));
    }

    auto j = ctx_.dependentIndex(head);
    if (!j)
      throw ParseError("undeclared dependent variable '" + head + "'",
                       static_cast<long>(start));
    std::vector<int> sigma(static_cast<size_t>(ctx_.numIndependent()), 0);
    size_t at = 0;
    while (at < suffix.size()) {
      // Greedy longest match against the declared independent names.
      int best = -1;
      size_t bestLen = 0;
      for (int i = 0; i < ctx_.numIndependent(); ++i) {
        const std::string& name = ctx_.independentName(i);
        if (name.size() > bestLen && suffix.compare(at, name.size(), name) == 0) {
          best = i;
          bestLen = name.size();
        }
      }
      if (best < 0)
        throw ParseError("derivative suffix '" + suffix +
                             "' is not a string of independent-variable names",
                         static_cast<long>(start));
      ++sigma[static_cast<size_t>(best)];
      at += bestLen;
    }
    return JetExpr::coordinate(Coordinate::jet(*j, MultiIndex(std::move(sigma))));
  }

  const std::string& text_;
  const JetContext& ctx_;
  size_t pos_ = 0;
};

void printMonomial(std::ostream& os, const Monomial& m, const JetContext& ctx) {
  bool first = true;
  for (const auto& [c, e] : m) {
    if (!first) os << '*';
    first = false;
    os << ctx.coordinateName(c);
    if (e > 1) os << '^' << e;
  }
}

void printPoly(std::ostream& os, const Poly& p, const JetContext& ctx) {
  if (p.isZero()) {
    os << '0';
    return;
  }
  bool first = true;
  // Leading (largest) monomial first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (first) {
      if (sign(a) < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (sign(a) < 0 ? " - " : " + ");
      a = abs(a);
    }
    first = false;
    if (m.empty()) {
      os << toString(a);
    } else {
      if (a != 1) os << toString(a) << '*';
      printMonomial(os, m, ctx);
    }
  }
}

}  // namespace

JetExpr parse(const std::string& text, const JetContext& ctx) {
  return Parser(text, ctx).run();
}

std::string toString(const Poly& p, const JetContext& ctx) {
  std::ostringstream os;
  printPoly(os, p, ctx);
  return os.str();
}

std::string toString(const JetExpr& e, const JetContext& ctx) {
  std::ostringstream os;
  if (e.isPolynomial()) {
    printPoly(os, e.numerator(), ctx);
  } else {
    os << '(';
    printPoly(os, e.numerator(), ctx);
    os << ")/(";
    printPoly(os, e.denominator(), ctx);
    os << ')';
  }
  return os.str();
}

}  // namespace jetcalc
