#pragma once

#include "confyb/poly.hpp"

#include <deque>
#include <string>
#include <vector>

namespace confyb {

/// A nonzero leftover of an identity, labelled by the basis data it was
/// evaluated on (e.g. "L,W,L -> W").
struct Residual {
  std::string basis;
  Poly poly;
};

struct Check {
  std::string name;
  std::vector<Residual> residuals;  // only nonzero entries are kept
  std::vector<std::string> notes;

  bool ok() const { return residuals.empty(); }
  void add(std::string basis, const Poly& p) {
    if (!p.is_zero()) residuals.push_back({std::move(basis), p});
  }
};

struct Report {
  std::deque<Check> checks;  // add_check references stay valid

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
  Check& add_check(std::string name) {
    checks.push_back({std::move(name), {}, {}});
    return checks.back();
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void append(const Report& other, const std::string& prefix = "") {
    for (auto c : other.checks) {
      c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
  }
};

}  // namespace confyb
