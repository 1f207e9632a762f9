#include "confyb/catalog.hpp"

namespace confyb {

namespace {

const Poly D = Poly::var("d");
const Poly X = Poly::var("x");

Poly g_of(const Poly& t) {
  Poly g;
  for (unsigned k = 0; k <= 3; ++k) g += Poly::var("g" + std::to_string(k)) * t.pow(k);
  return g;
}

ConformalAlgebra hv_with(VarTable vars) {
  ConformalAlgebra hv(AlgebraKind::Lie, {"L", "W"}, std::move(vars));
  hv.set_product("L", "L", "L", D + 2 * X);
  hv.set_product("L", "W", "W", D + X);
  hv.set_product("W", "L", "W", X);
  return hv;
}

}  // namespace

ConformalAlgebra virasoro() {
  ConformalAlgebra vir(AlgebraKind::Lie, {"L"});
  vir.set_product("L", "L", "L", D + 2 * X);
  return vir;
}

ConformalAlgebra heisenberg_virasoro() { return hv_with({}); }

GDBialgebra virasoro_gd() {
  GDBialgebra V({"L"});
  V.circ.set(0, 0, 0, Poly(1));
  return V;
}

GDBialgebra heisenberg_virasoro_gd() {
  GDBialgebra V({"L", "W"});
  V.circ.set(0, 0, 0, Poly(1));
  V.circ.set(1, 0, 1, Poly(1));
  return V;
}

VarTable hv_family1_vars() { return VarTable({"b"}); }
VarTable hv_family2_vars() { return VarTable({"g0", "g1", "g2", "g3"}); }

ModuleMap hv_rb_family1() {
  const Poly b = Poly::var("b");
  ModuleMap T(2, 2);
  T.set(0, 0, -b);
  T.set(0, 1, -b);
  T.set(1, 0, b);
  T.set(1, 1, b);
  return T;
}

ModuleMap hv_rb_family2() {
  ModuleMap T(2, 2);
  T.set(0, 1, g_of(D));
  return T;
}

ConformalAlgebra hv_lsc1() {
  const Poly b = Poly::var("b");
  ConformalAlgebra A(AlgebraKind::LeftSymmetric, {"L", "W"}, hv_family1_vars());
  A.set_product("L", "L", "L", -b * (D + 2 * X));
  A.set_product("L", "L", "W", -b * X);
  A.set_product("L", "W", "W", -b * (D + X));
  A.set_product("W", "L", "L", b * (D + 2 * X));
  A.set_product("W", "L", "W", b * X);
  A.set_product("W", "W", "W", b * (D + X));
  return A;
}

ConformalAlgebra hv_lsc2() {
  ConformalAlgebra A(AlgebraKind::LeftSymmetric, {"L", "W"}, hv_family2_vars());
  A.set_product("L", "L", "W", g_of(-X) * X);
  return A;
}

ConformalAlgebra lie_double(const ConformalAlgebra& lsc) {
  const ConformalAlgebra g = sub_adjacent(lsc);
  return semidirect(g, dual_rep(standard_rep(lsc, StandardRep::RegularLeft)));
}

ConformalAlgebra lsc_double(const ConformalAlgebra& lsc) {
  return semidirect(lsc, left_module(lsc, dual_rep(standard_rep(lsc, StandardRep::RegularLeft))));
}

Tensor2 canonical_skew_r(std::size_t rank) {
  Tensor2 r(2 * rank);
  for (std::size_t i = 0; i < rank; ++i) {
    r.set(i, rank + i, Poly(1));
    r.set(rank + i, i, Poly(-1));
  }
  return r;
}

Tensor2 canonical_sym_r(std::size_t rank) {
  Tensor2 r(2 * rank);
  for (std::size_t i = 0; i < rank; ++i) {
    r.set(i, rank + i, Poly(1));
    r.set(rank + i, i, Poly(1));
  }
  return r;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "vir",          "hv",           "vir_gd",           "hv_gd",           "hv_rb_family1",   "hv_rb_family2",
      "hv_lsc1",      "hv_lsc2",      "skew_r:hv_lsc1",   "skew_r:hv_lsc2",  "sym_r:hv_lsc1",   "sym_r:hv_lsc2"};
  return names;
}

CatalogEntry catalog(const std::string& name) {
  CatalogEntry e;
  e.name = name;
  if (name == "vir") {
    e.description = "Virasoro conformal algebra, [L_x L] = (d+2x)L";
    e.algebra = virasoro();
  } else if (name == "hv") {
    e.description = "Heisenberg-Virasoro conformal algebra, [L_x L] = (d+2x)L, [L_x W] = (d+x)W";
    e.algebra = heisenberg_virasoro();
  } else if (name == "vir_gd") {
    e.description = "Novikov algebra L o L = L with zero bracket (Virasoro)";
    e.gd = virasoro_gd();
  } else if (name == "hv_gd") {
    e.description = "GD bialgebra of Heisenberg-Virasoro: L o L = L, W o L = W";
    e.gd = heisenberg_virasoro_gd();
  } else if (name == "hv_rb_family1") {
    e.description = "Rota-Baxter operator on hv: T(L) = -b(L+W), T(W) = b(L+W)";
    e.algebra = hv_with(hv_family1_vars());
    e.map = hv_rb_family1();
  } else if (name == "hv_rb_family2") {
    e.description = "Rota-Baxter operator on hv: T(L) = g(d)W, T(W) = 0, deg g <= 3";
    e.algebra = hv_with(hv_family2_vars());
    e.map = hv_rb_family2();
  } else if (name == "hv_lsc1") {
    e.description = "left-symmetric structure a_x b = [T(a)_x b] from hv_rb_family1";
    e.algebra = hv_lsc1();
  } else if (name == "hv_lsc2") {
    e.description = "left-symmetric structure a_x b = [T(a)_x b] from hv_rb_family2";
    e.algebra = hv_lsc2();
  } else if (name.rfind("skew_r:", 0) == 0 || name.rfind("sym_r:", 0) == 0) {
    const bool skew = name[1] == 'k';
    const std::string base = name.substr(name.find(':') + 1);
    ConformalAlgebra A;
    if (base == "hv_lsc1")
      A = hv_lsc1();
    else if (base == "hv_lsc2")
      A = hv_lsc2();
    else
      throw AlgebraError("unknown left-symmetric base '" + base + "' (known: hv_lsc1, hv_lsc2)");
    if (skew) {
      e.description = "sum e_i (x) e_i* - e_i* (x) e_i in g(A) extended by L_A*, A = " + base;
      e.algebra = lie_double(A);
      e.tensor = canonical_skew_r(A.rank());
    } else {
      e.description = "sum e_i (x) e_i* + e_i* (x) e_i in A extended by (L_A*, 0), A = " + base;
      e.algebra = lsc_double(A);
      e.tensor = canonical_sym_r(A.rank());
    }
  } else {
    std::string known;
    for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
    throw AlgebraError("unknown catalog entry '" + name + "'; available: " + known);
  }
  return e;
}

}  // namespace confyb
