#pragma once

#include <compare>
#include <tuple>

#include "jetcalc/multiindex.hpp"

namespace jetcalc {

enum class CoordKind { Independent = 0, Jet = 1, Nonlocal = 2 };

// One symbol of the ambient chart: an independent variable x_i, a jet
// coordinate u^j_sigma, or a covering fiber coordinate w_a.
class Coordinate {
 public:
  static Coordinate independent(int i) { return Coordinate(CoordKind::Independent, i, {}); }
  static Coordinate jet(int j, MultiIndex sigma) {
    return Coordinate(CoordKind::Jet, j, std::move(sigma));
  }
  static Coordinate nonlocal(int a) { return Coordinate(CoordKind::Nonlocal, a, {}); }

  CoordKind kind() const { return kind_; }
  bool isIndependent() const { return kind_ == CoordKind::Independent; }
  bool isJet() const { return kind_ == CoordKind::Jet; }
  bool isNonlocal() const { return kind_ == CoordKind::Nonlocal; }

  // independent-variable index, dependent-variable index, or fiber index
  int index() const { return index_; }

  const MultiIndex& sigma() const { return sigma_; }
  int jetOrder() const { return isJet() ? sigma_.order() : 0; }

  Coordinate bumped(int i) const {
    if (!isJet()) throw DomainError("only jet coordinates can be differentiated");
    return jet(index_, sigma_.bumped(i));
  }

  bool operator==(const Coordinate& o) const {
    return kind_ == o.kind_ && index_ == o.index_ && sigma_ == o.sigma_;
  }

  // Total order: kind, then index, then multi-index in graded lex.
  std::strong_ordering operator<=>(const Coordinate& o) const {
    if (auto c = kind_ <=> o.kind_; c != 0) return c;
    if (auto c = index_ <=> o.index_; c != 0) return c;
    return sigma_ <=> o.sigma_;
  }

 private:
  Coordinate(CoordKind kind, int index, MultiIndex sigma)
      : kind_(kind), index_(index), sigma_(std::move(sigma)) {
    if (index < 0) throw DomainError("coordinate index must be non-negative");
  }

  CoordKind kind_;
  int index_;
  MultiIndex sigma_;  // Jet only; empty otherwise
};

}  // namespace jetcalc
