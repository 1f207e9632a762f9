#pragma once

#include "confyb/conformal.hpp"

#include <string>
#include <vector>

namespace confyb {

/// A finite free module over a conformal algebra, given by structure
/// constants. Over a Lie algebra: rho(e_i)_x v_j = sum_k rho_ijk(d, x) v_k.
/// Over a left-symmetric algebra: the pair (l, r) where a_x v = l(a)_x v and
/// v_x a = r(a)_{-x-d} v.
class Representation {
public:
  Representation() = default;
  Representation(ConformalAlgebra algebra, std::vector<std::string> module_basis);

  AlgebraKind kind() const { return m_algebra.kind(); }
  const ConformalAlgebra& algebra() const { return m_algebra; }
  std::size_t module_rank() const { return m_module_basis.size(); }
  const std::vector<std::string>& module_basis() const { return m_module_basis; }
  std::size_t module_index(const std::string& name) const;

  /// rho (Lie kind) or l (left-symmetric kind).
  const ProductTable& action() const { return m_action; }
  /// r; left-symmetric kind only.
  const ProductTable& right_action() const { return m_right; }
  void set_action(std::size_t i, std::size_t j, std::size_t k, const Poly& p) { m_action.set(i, j, k, p); }
  void set_right_action(std::size_t i, std::size_t j, std::size_t k, const Poly& p);
  void set_action(ProductTable t);
  void set_right_action(ProductTable t);

  /// rho(a)_sigma v.
  Element apply(const Element& a, const Element& v, const Poly& sigma) const;

  Representation subst(const std::map<std::string, Poly>& values) const;

private:
  ConformalAlgebra m_algebra;
  std::vector<std::string> m_module_basis;
  ProductTable m_action;
  ProductTable m_right;
};

/// Module axioms: the representation identity for Lie kind, the two
/// left-symmetric module identities otherwise.
Report check_rep(const Representation& rep);

enum class StandardRep { Adjoint, RegularLeft, RegularRight, LeftMinusRight };

/// adjoint: Lie A acting on itself.
/// regular_left, left_minus_right: representations of g(A) on A for a
///   left-symmetric A.
/// regular_right: the regular module (L_A, R_A) of a left-symmetric A.
Representation standard_rep(const ConformalAlgebra& algebra, StandardRep which);

/// Dual representation on the conformal dual, basis names suffixed with '*'.
Representation dual_rep(const Representation& rep);

/// (sigma, 0) as a module over the left-symmetric algebra A, for a
/// representation sigma of g(A).
Representation left_module(const ConformalAlgebra& lsc, const Representation& lie_rep);

/// Semidirect sum on the concatenated basis (algebra first, then module).
/// Module names that clash with the algebra basis are primed.
ConformalAlgebra semidirect(const ConformalAlgebra& algebra, const Representation& rep);

}  // namespace confyb
