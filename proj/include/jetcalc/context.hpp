#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetcalc/coordinate.hpp"

namespace jetcalc {

// Declares the ambient chart: independent variables x_1..x_n, dependent
// variables u^1..u^m, and optionally the fiber coordinates w_1..w_r of a
// covering. Immutable after construction.
class JetContext {
 public:
  JetContext(std::vector<std::string> independents, std::vector<std::string> dependents,
             std::vector<std::string> fibers = {});

  int numIndependent() const { return static_cast<int>(independents_.size()); }
  int numDependent() const { return static_cast<int>(dependents_.size()); }
  int numFiber() const { return static_cast<int>(fibers_.size()); }

  const std::vector<std::string>& independents() const { return independents_; }
  const std::vector<std::string>& dependents() const { return dependents_; }
  const std::vector<std::string>& fibers() const { return fibers_; }

  const std::string& independentName(int i) const;
  const std::string& dependentName(int j) const;
  const std::string& fiberName(int a) const;

  std::optional<int> independentIndex(const std::string& name) const;
  std::optional<int> dependentIndex(const std::string& name) const;
  std::optional<int> fiberIndex(const std::string& name) const;

  // A copy of this context with fiber coordinates appended.
  JetContext withFibers(std::vector<std::string> fibers) const;

  // Validates that a coordinate's indices and multi-index length fit here.
  void check(const Coordinate& c) const;

  // Concrete-syntax name: "x", "u", "u_xxt", "w".
  std::string coordinateName(const Coordinate& c) const;

  bool operator==(const JetContext& o) const {
    return independents_ == o.independents_ && dependents_ == o.dependents_ &&
           fibers_ == o.fibers_;
  }

 private:
  std::vector<std::string> independents_;
  std::vector<std::string> dependents_;
  std::vector<std::string> fibers_;
};

}  // namespace jetcalc
