#include "jetcalc/ansatz.hpp"

#include <algorithm>

#include "jetcalc/errors.hpp"

namespace jetcalc {

namespace {

void enumerateMultiIndices(int n, int maxOrder, std::vector<int>& current,
                           std::vector<MultiIndex>& out) {
  if (static_cast<int>(current.size()) == n) {
    out.emplace_back(current);
    return;
  }
  int used = 0;
  for (int e : current) used += e;
  for (int e = 0; e + used <= maxOrder; ++e) {
    current.push_back(e);
    enumerateMultiIndices(n, maxOrder, current, out);
    current.pop_back();
  }
}

// Monomials of total degree <= maxDegree over the given coordinates
// (combinations with repetition), appended to `out` with `prefix` applied.
void enumerateMonomials(const std::vector<Coordinate>& coords, size_t from, int maxDegree,
                        Monomial& prefix, std::vector<Monomial>& out) {
  out.push_back(prefix);
  if (maxDegree == 0) return;
  for (size_t i = from; i < coords.size(); ++i) {
    for (int e = 1; e <= maxDegree; ++e) {
      Monomial next = prefix;
      next.emplace_back(coords[i], e);
      std::swap(prefix, next);
      enumerateMonomials(coords, i + 1, maxDegree - e, prefix, out);
      std::swap(prefix, next);
    }
  }
}

}  // namespace

std::vector<Monomial> ansatzMonomials(const PdeSystem& sys, const AnsatzSpec& spec) {
  if (spec.maxOrder < 0 || spec.maxDegree < 1 || spec.xtDegree < 0)
    throw DomainError("ansatz bounds out of range");
  const JetContext& ctx = sys.context();

  std::vector<Coordinate> jets;
  std::vector<MultiIndex> sigmas;
  std::vector<int> scratch;
  enumerateMultiIndices(ctx.numIndependent(), spec.maxOrder, scratch, sigmas);
  for (int j = 0; j < ctx.numDependent(); ++j)
    for (const MultiIndex& sigma : sigmas) {
      Coordinate c = Coordinate::jet(j, sigma);
      if (sys.isInternal(c)) jets.push_back(c);
    }
  std::sort(jets.begin(), jets.end());

  std::vector<Coordinate> xs;
  for (int i = 0; i < ctx.numIndependent(); ++i) xs.push_back(Coordinate::independent(i));

  std::vector<Monomial> jetPart;
  Monomial prefix;
  enumerateMonomials(jets, 0, spec.maxDegree, prefix, jetPart);

  std::vector<Monomial> xPart{Monomial{}};
  if (spec.xtDegree > 0) {
    xPart.clear();
    Monomial xprefix;
    enumerateMonomials(xs, 0, spec.xtDegree, xprefix, xPart);
  }

  if (static_cast<long>(jetPart.size()) * static_cast<long>(xPart.size()) >
      spec.monomialLimit)
    throw DomainError("ansatz size limit exceeded (" +
                      std::to_string(jetPart.size() * xPart.size()) + " > " +
                      std::to_string(spec.monomialLimit) + " monomials)");

  std::vector<Monomial> all;
  all.reserve(jetPart.size() * xPart.size());
  for (const Monomial& xm : xPart)
    for (const Monomial& jm : jetPart) all.push_back(monomialMul(xm, jm));
  std::sort(all.begin(), all.end(), MonomialLess{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace jetcalc
