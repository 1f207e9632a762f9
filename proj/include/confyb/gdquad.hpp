#pragma once

// Gel'fand-Dorfman bialgebras (a Novikov product and a Lie bracket on one
// finite-dimensional space) and their correspondence with quadratic Lie
// conformal algebras:
//   [a_x b] = d (b o a) + x (a * b) + [b, a],   a * b = a o b + b o a.

#include "confyb/conformal.hpp"
#include "confyb/module_map.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace confyb {

class NotQuadratic : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Structure constants are polynomials free of d and x (rationals, possibly
/// with parameters). e_i o e_j = sum_k circ(i,j,k) e_k, likewise for lie.
struct GDBialgebra {
  std::vector<std::string> basis;
  VarTable vars;
  ProductTable circ;
  ProductTable lie;

  GDBialgebra() = default;
  GDBialgebra(std::vector<std::string> names, VarTable v = {});

  std::size_t dim() const { return basis.size(); }
  std::size_t index_of(const std::string& name) const;
  /// Constant-coefficient product on coefficient vectors.
  Element product(const ProductTable& table, const Element& a, const Element& b) const;
  Element star(const Element& a, const Element& b) const;

  bool operator==(const GDBialgebra&) const = default;
};

/// Novikov axioms, Lie axioms and the compatibility condition.
Report check_gd(const GDBialgebra& V);

ConformalAlgebra quadratic_from_gd(const GDBialgebra& V);

/// Inverse direction; throws NotQuadratic unless every bracket is affine in
/// d and x without a d*x term and its x-part matches the symmetrized product.
GDBialgebra gd_from_quadratic(const ConformalAlgebra& R);

struct ZeroDivisorResult {
  enum class Kind { NoZeroDivisors, Witness, Unknown } kind = Kind::Unknown;
  Element a, b;
};

std::string to_string(ZeroDivisorResult::Kind k);

/// Exact in dimension 1; otherwise a bounded search for a * b = 0.
ZeroDivisorResult zero_divisor_probe(const GDBialgebra& V, int bound = 3);

/// Weight-alpha Rota-Baxter identity for o and for [,], plus the same
/// identity for the lift of T to the quadratic conformal algebra.
Report rb_gd_check(const GDBialgebra& V, const ModuleMap& T, const Poly& weight = Poly());

}  // namespace confyb
