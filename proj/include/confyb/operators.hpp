#pragma once

// O-operators, Rota-Baxter operators and the structures they induce,
// 2-cocycles attached to non-degenerate tensors, invariant bilinear forms,
// and constraint systems for classifying Rota-Baxter operators.

#include "confyb/conformal.hpp"
#include "confyb/module_map.hpp"
#include "confyb/reps.hpp"
#include "confyb/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confyb {

/// [T u_x T v] - T(rho(Tu)_x v - rho(Tv)_{-x-d} u) on module basis pairs.
/// With ker_mode the residual itself may be nonzero as long as rho kills it.
Report check_o_operator(const ModuleMap& T, const Representation& rep, bool ker_mode = false);

/// [Ta_x Tb] - T[a_x Tb] - T[Ta_x b] - weight * T[a_x b] on basis pairs.
Report check_rota_baxter(const ConformalAlgebra& algebra, const ModuleMap& T, const Poly& weight = Poly());

enum class InducedMode { OProduct, Bijective, RotaBaxter };

/// o_product: u *_x v = rho(Tu)_x v on the module.
/// bijective: a_x b = T(rho(a)_x T^-1 b) on the algebra.
/// rb:        a_x b = [Ta_x b] on the algebra (rep must be the adjoint one).
ConformalAlgebra induced_lsc(const ModuleMap& T, const Representation& rep, InducedMode mode);

/// Form on basis pairs, form(e_i, e_j)_x = c_ij(x); extended by
/// form(p(d) e_i, q(d) e_j)_x = p(-x) q(x) c_ij(x).
struct CocycleForm {
  AlgebraKind kind = AlgebraKind::Lie;
  std::size_t rank = 0;
  std::vector<Poly> entries;  // row-major

  CocycleForm() = default;
  CocycleForm(AlgebraKind k, std::size_t n) : kind(k), rank(n), entries(n * n) {}
  const Poly& at(std::size_t i, std::size_t j) const { return entries.at(i * rank + j); }
  void set(std::size_t i, std::size_t j, const Poly& p) { entries.at(i * rank + j) = p; }
  bool is_zero() const;
  bool operator==(const CocycleForm&) const = default;
};

using BilinearForm = CocycleForm;

/// form(u, v)_sigma for arbitrary elements.
Poly evaluate_form(const CocycleForm& form, const Element& u, const Element& v, const Poly& sigma);

/// c_ij(x) = {T0^-1(e_i), e_j}_x with T0 from t_from_r. The form kind follows
/// the algebra: r must be skew (Lie) or symmetric (left-symmetric).
CocycleForm cocycle_from_r(const ConformalAlgebra& algebra, const Tensor2& r);

/// Symmetry law and cocycle identity for the form's kind.
Report cocycle_check(const ConformalAlgebra& algebra, const CocycleForm& form);

/// The module map a -> <a, .> into the conformal dual, as a matrix over Q[d].
ModuleMap form_matrix(const BilinearForm& B);

/// P^r_0 for a non-degenerate form B; throws NotInvertible otherwise.
ModuleMap p_zero_from_r(const BilinearForm& B, const Tensor2& r);

/// Symmetry, invariance and non-degeneracy of B; with r, also the
/// Rota-Baxter identity for P^r_0 (check "p0_rota_baxter").
Report invariant_form_suite(const ConformalAlgebra& algebra, const BilinearForm& B,
                            const std::optional<Tensor2>& r = std::nullopt);

/// Polynomials that must vanish identically in d, x, y; the equations proper
/// are their coefficients, as polynomials in the unknowns.
struct PolySystem {
  std::vector<std::string> unknowns;
  std::vector<Poly> equations;

  /// One equation per monomial coefficient in the spectral/slot variables.
  std::vector<Poly> expanded() const;
};

/// Unknown names used by rb_constraints: t_<i>_<j>_<p> is the coefficient of
/// d^p in T(e_i) along e_j. Arguments are 0-based, the name is 1-based.
std::string rb_unknown(std::size_t i, std::size_t j, std::size_t p);

/// Generic T = sum_{p <= degree} d^p T_p with unknown coefficients.
ModuleMap generic_module_map(std::size_t rank, unsigned degree);

PolySystem rb_constraints(const ConformalAlgebra& algebra, unsigned degree, const Poly& weight = Poly());

class Inconsistent : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SolveResult {
  bool solved = false;
  std::map<std::string, Poly> assignment;
  std::vector<Poly> remaining;
};

/// Square-cascade and linear elimination only; throws Inconsistent when an
/// equation reduces to a nonzero constant.
SolveResult solve_squares(const PolySystem& sys);

}  // namespace confyb
