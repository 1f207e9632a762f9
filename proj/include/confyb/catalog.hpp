#pragma once

// Builtin algebras, operators and tensors.

#include "confyb/conformal.hpp"
#include "confyb/gdquad.hpp"
#include "confyb/module_map.hpp"
#include "confyb/reps.hpp"
#include "confyb/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace confyb {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::optional<ConformalAlgebra> algebra;
  std::optional<ModuleMap> map;
  std::optional<Tensor2> tensor;
  std::optional<GDBialgebra> gd;
};

/// vir, hv, vir_gd, hv_gd, hv_rb_family1, hv_rb_family2, hv_lsc1, hv_lsc2,
/// skew_r:<lsc>, sym_r:<lsc>.
const std::vector<std::string>& catalog_names();

/// Throws AlgebraError listing the known names when `name` is unknown.
CatalogEntry catalog(const std::string& name);

ConformalAlgebra virasoro();
ConformalAlgebra heisenberg_virasoro();
GDBialgebra virasoro_gd();
GDBialgebra heisenberg_virasoro_gd();
/// T(L) = -b(L+W), T(W) = b(L+W).
ModuleMap hv_rb_family1();
/// T(L) = g(d) W with g = g0 + g1 d + g2 d^2 + g3 d^3, T(W) = 0.
ModuleMap hv_rb_family2();
/// Parameters used by the two families.
VarTable hv_family1_vars();
VarTable hv_family2_vars();
/// Left-symmetric structures a_x b = [T(a)_x b] written out explicitly.
ConformalAlgebra hv_lsc1();
ConformalAlgebra hv_lsc2();

/// g(A) extended by the dual of its regular left representation.
ConformalAlgebra lie_double(const ConformalAlgebra& lsc);
/// A extended by the dual of L_A with zero right action.
ConformalAlgebra lsc_double(const ConformalAlgebra& lsc);
/// sum_i e_i (x) e_i* - e_i* (x) e_i over the doubled basis.
Tensor2 canonical_skew_r(std::size_t rank);
/// sum_i e_i (x) e_i* + e_i* (x) e_i over the doubled basis.
Tensor2 canonical_sym_r(std::size_t rank);

}  // namespace confyb
