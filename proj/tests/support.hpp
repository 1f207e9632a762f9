#pragma once

#include "confyb/poly.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

inline confyb::Poly P(const std::string& text, std::vector<std::string> params = {}) {
  return confyb::parse_poly(text, confyb::VarTable(std::move(params)));
}

/// Random polynomial with small integer coefficients in the given variables.
inline confyb::Poly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, unsigned max_deg = 3,
                                int terms = 4) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, static_cast<int>(max_deg));
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  confyb::Poly p;
  for (int t = 0; t < terms; ++t) {
    confyb::Poly m(coef(rng));
    const int factors = deg(rng);
    for (int f = 0; f < factors; ++f) m *= confyb::Poly::var(vars[pick(rng)]);
    p += m;
  }
  return p;
}

}  // namespace testing
