#include "jetcalc/context.hpp"

#include <cctype>
#include <set>

#include "jetcalc/errors.hpp"

namespace jetcalc {

namespace {

void checkName(const std::string& name) {
  if (name.empty()) throw DomainError("variable name must be non-empty");
  if (!std::isalpha(static_cast<unsigned char>(name[0])))
    throw DomainError("variable name must start with a letter: '" + name + "'");
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)))
      throw DomainError("variable name must be alphanumeric: '" + name + "'");
}

}  // namespace

JetContext::JetContext(std::vector<std::string> independents,
                       std::vector<std::string> dependents,
                       std::vector<std::string> fibers)
    : independents_(std::move(independents)),
      dependents_(std::move(dependents)),
      fibers_(std::move(fibers)) {
  if (independents_.empty()) throw DomainError("need at least one independent variable");
  if (dependents_.empty()) throw DomainError("need at least one dependent variable");
  std::set<std::string> seen;
  for (const auto* group : {&independents_, &dependents_, &fibers_}) {
    for (const std::string& name : *group) {
      checkName(name);
      if (!seen.insert(name).second)
        throw DomainError("duplicate variable name: '" + name + "'");
    }
  }
}

const std::string& JetContext::independentName(int i) const {
  if (i < 0 || i >= numIndependent()) throw DomainError("independent index out of range");
  return independents_[static_cast<size_t>(i)];
}

const std::string& JetContext::dependentName(int j) const {
  if (j < 0 || j >= numDependent()) throw DomainError("dependent index out of range");
  return dependents_[static_cast<size_t>(j)];
}

const std::string& JetContext::fiberName(int a) const {
  if (a < 0 || a >= numFiber()) throw DomainError("fiber index out of range");
  return fibers_[static_cast<size_t>(a)];
}

namespace {
std::optional<int> findName(const std::vector<std::string>& names, const std::string& name) {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return std::nullopt;
}
}  // namespace

std::optional<int> JetContext::independentIndex(const std::string& name) const {
  return findName(independents_, name);
}
std::optional<int> JetContext::dependentIndex(const std::string& name) const {
  return findName(dependents_, name);
}
std::optional<int> JetContext::fiberIndex(const std::string& name) const {
  return findName(fibers_, name);
}

JetContext JetContext::withFibers(std::vector<std::string> fibers) const {
  return JetContext(independents_, dependents_, std::move(fibers));
}

void JetContext::check(const Coordinate& c) const {
  switch (c.kind()) {
    case CoordKind::Independent:
      if (c.index() >= numIndependent())
        throw DomainError("independent coordinate index out of range");
      break;
    case CoordKind::Jet:
      if (c.index() >= numDependent())
        throw DomainError("dependent coordinate index out of range");
      if (c.sigma().size() != numIndependent())
        throw DomainError("jet multi-index length does not match context");
      break;
    case CoordKind::Nonlocal:
      if (c.index() >= numFiber()) throw DomainError("fiber coordinate index out of range");
      break;
  }
}

std::string JetContext::coordinateName(const Coordinate& c) const {
  check(c);
  switch (c.kind()) {
    case CoordKind::Independent:
      return independentName(c.index());
    case CoordKind::Nonlocal:
      return fiberName(c.index());
    case CoordKind::Jet: {
      std::string s = dependentName(c.index());
      if (c.sigma().isZero()) return s;
      s += '_';
      for (int i = 0; i < c.sigma().size(); ++i)
        for (int k = 0; k < c.sigma()[i]; ++k) s += independentName(i);
      return s;
    }
  }
  throw DomainError("unreachable coordinate kind");
}

}  // namespace jetcalc
