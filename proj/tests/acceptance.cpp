// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include "confyb/catalog.hpp"
#include "confyb/coeff.hpp"
#include "confyb/gdquad.hpp"
#include "confyb/operators.hpp"
#include "confyb/tensor.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace confyb;

namespace {

const std::vector<std::string> G{"g0", "g1", "g2", "g3"};

Poly P(const std::string& text, std::vector<std::string> params = {}) {
  return parse_poly(text, VarTable(std::move(params)));
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool all_residuals_zero(const Report& r) {
  for (const auto& c : r.checks)
    for (const auto& res : c.residuals)
      if (!res.poly.is_zero()) return false;
  return r.ok();
}

ConformalAlgebra induced(const std::string& family) {
  const CatalogEntry e = catalog(family);
  return induced_lsc(*e.map, standard_rep(*e.algebra, StandardRep::Adjoint), InducedMode::RotaBaxter);
}

/// The displayed tables, typed in by hand.
ConformalAlgebra displayed_table1() {
  const std::vector<std::string> b{"b"};
  ConformalAlgebra A(AlgebraKind::LeftSymmetric, {"L", "W"}, VarTable(b));
  A.set_product("L", "L", "L", P("-b*(d+2*x)", b));
  A.set_product("L", "L", "W", P("-b*x", b));
  A.set_product("L", "W", "W", P("-b*(d+x)", b));
  A.set_product("W", "L", "L", P("b*(d+2*x)", b));
  A.set_product("W", "L", "W", P("b*x", b));
  A.set_product("W", "W", "W", P("b*(d+x)", b));
  return A;
}

ConformalAlgebra displayed_table2() {
  ConformalAlgebra A(AlgebraKind::LeftSymmetric, {"L", "W"}, VarTable(G));
  A.set_product("L", "L", "W", P("(g0 - g1*x + g2*x^2 - g3*x^3)*x", G));
  return A;
}

Outcome axiom_suite() {
  Outcome o;
  o.require(all_residuals_zero(check_axioms(virasoro())), "Virasoro has residuals");
  o.require(all_residuals_zero(check_axioms(heisenberg_virasoro())), "Heisenberg-Virasoro has residuals");
  ConformalAlgebra mutant = virasoro();
  mutant.set_product("L", "L", "L", P("d+3*x"));
  const Report r = check_axioms(mutant);
  const Check* skew = r.find("skew_symmetry");
  o.require(skew && !skew->residuals.empty() && !skew->residuals.front().poly.is_zero(),
            "mutant passes skew-symmetry");
  if (o.ok) o.detail = "mutant skew residual " + skew->residuals.front().poly.to_string();
  return o;
}

Outcome rb_families() {
  Outcome o;
  for (const char* name : {"hv_rb_family1", "hv_rb_family2"}) {
    const CatalogEntry e = catalog(name);
    o.require(all_residuals_zero(check_rota_baxter(*e.algebra, *e.map)), std::string(name) + " fails");
  }
  return o;
}

Outcome induced_structures() {
  Outcome o;
  const ConformalAlgebra a1 = induced("hv_rb_family1"), a2 = induced("hv_rb_family2");
  o.require(a1.table() == displayed_table1().table(), "family 1 table differs");
  o.require(a2.table() == displayed_table2().table(), "family 2 table differs");
  o.require(a1.kind() == AlgebraKind::LeftSymmetric && check_axioms(a1).ok(), "family 1 not left-symmetric");
  o.require(a2.kind() == AlgebraKind::LeftSymmetric && check_axioms(a2).ok(), "family 2 not left-symmetric");
  return o;
}

Outcome skew_double_cybe() {
  Outcome o;
  for (const char* family : {"hv_rb_family1", "hv_rb_family2"}) {
    const ConformalAlgebra A = induced(family);
    const ConformalAlgebra ext = lie_double(A);
    o.require(ext.rank() == 4 && ext.kind() == AlgebraKind::Lie, "double is not a rank-4 Lie algebra");
    o.require(cybe_residual(ext, canonical_skew_r(2)).is_zero(), std::string(family) + ": CYBE residual");
  }
  return o;
}

Outcome symmetric_double_s() {
  Outcome o;
  for (const char* family : {"hv_rb_family1", "hv_rb_family2"}) {
    const ConformalAlgebra ext = lsc_double(induced(family));
    o.require(s_residual(ext, canonical_sym_r(2)).is_zero(), std::string(family) + ": S residual");
  }
  return o;
}

Outcome o_operator_tensors() {
  Outcome o;
  for (const auto& A : {induced("hv_rb_family1"), induced("hv_rb_family2")}) {
    const Representation rep = standard_rep(A, StandardRep::RegularLeft);
    const ConformalAlgebra ext = semidirect(rep.algebra(), dual_rep(rep));
    const ModuleMap id = ModuleMap::identity(2);
    o.require(check_o_operator(id, rep).ok(), "identity is not an O-operator");
    const auto T = ConformalLinearMap::from_module_map(id);
    o.require(cybe_residual(ext, r_from_t(T, rep, RMode::Skew)).is_zero(), "verified T gives CYBE residual");

    ModuleMap bumped = id;
    bumped.set(0, 0, bumped.at(0, 0) + Poly(1));
    const auto Tb = ConformalLinearMap::from_module_map(bumped);
    o.require(!cybe_residual(ext, r_from_t(Tb, rep, RMode::Skew)).is_zero(), "perturbed T still solves CYBE");

    ConformalLinearMap T2 = T;
    T2.set(0, 1, P("x*(2-d)"));
    T2.set(1, 0, P("-5*x"));
    T2.set(1, 1, P("1+3*x"));
    const Tensor2 r = r_from_t(T, rep, RMode::Skew), r2 = r_from_t(T2, rep, RMode::Skew);
    for (std::size_t i = 0; i < ext.rank(); ++i)
      o.require(cobracket_from_r(ext, r, ext.basis_element(i)) == cobracket_from_r(ext, r2, ext.basis_element(i)),
                "cobracket changes under T + x M");
  }
  return o;
}

Outcome virasoro_classification() {
  Outcome o;
  const SolveResult s = solve_squares(rb_constraints(virasoro(), 3));
  o.require(s.solved, "system not solved");
  for (const auto& [name, value] : s.assignment) o.require(value.is_zero(), name + " is nonzero");
  o.require(s.assignment.size() == 4, "unexpected number of unknowns");

  ModuleMap T(1, 1);
  T.set(0, 0, Poly::var("c"));
  PolySystem sys;
  sys.unknowns = {"c"};
  for (const auto& c : rb_gd_check(virasoro_gd(), T).checks)
    if (c.name != "lifted_rota_baxter")
      for (const auto& res : c.residuals) sys.equations.push_back(res.poly);
  const SolveResult g = solve_squares(sys);
  o.require(g.solved && g.assignment.count("c") && g.assignment.at("c").is_zero(), "GD side does not force c = 0");
  return o;
}

Outcome cocycles() {
  Outcome o;
  for (const char* family : {"hv_rb_family1", "hv_rb_family2"}) {
    const ConformalAlgebra A = induced(family);
    // pairing {e_k*, e_j} = delta_kj; alpha(a+f, b+g) = {f,b}_x - {g,a}_-x
    const ConformalAlgebra lie = lie_double(A);
    const CocycleForm alpha = cocycle_from_r(lie, canonical_skew_r(2));
    const CocycleForm beta = cocycle_from_r(lsc_double(A), canonical_sym_r(2));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const bool f_then_b = i >= 2 && j == i - 2, a_then_g = i < 2 && j == i + 2;
        const Poly a_expected = f_then_b ? Poly(1) : a_then_g ? Poly(-1) : Poly();
        const Poly b_expected = (f_then_b || a_then_g) ? Poly(1) : Poly();
        o.require(alpha.at(i, j) == a_expected, "alpha differs on a basis pair");
        o.require(beta.at(i, j) == b_expected, "beta differs on a basis pair");
      }
    o.require(cocycle_check(lie, alpha).ok(), "alpha fails the cocycle check");
    o.require(cocycle_check(lsc_double(A), beta).ok(), "beta fails the cocycle check");
  }
  return o;
}

Outcome coefficient_window() {
  Outcome o;
  const CoeffWindow w(heisenberg_virasoro(), 6, {{"L", 1}, {"W", 0}});
  int compared = 0;
  for (long m = -4; m <= 4; ++m)
    for (long n = -4; n <= 4; ++n) {
      if (!w.in_window(m + n)) continue;
      const auto ll = coeff_bracket(w, WindowElement::symbol(0, m), WindowElement::symbol(0, n));
      const auto lw = coeff_bracket(w, WindowElement::symbol(0, m), WindowElement::symbol(1, n));
      o.require(ll && *ll == WindowElement::symbol(0, m + n, Poly(m - n)), "[L_m, L_n] differs");
      o.require(lw && *lw == WindowElement::symbol(1, m + n, Poly(-n)), "[L_m, W_n] differs");
      ++compared;
    }
  const Report plain = window_checks(w);
  o.require(plain.find("window_jacobi") && plain.ok(), "window Jacobi fails");
  const CatalogEntry f1 = catalog("hv_rb_family1");
  const Report lifted = window_checks(w, *f1.map);
  const Check* rb = lifted.find("lifted_rota_baxter");
  o.require(rb && lifted.ok(), "lifted family 1 fails");
  if (o.ok) o.detail = std::to_string(compared) + " index pairs, " + rb->notes.front();
  return o;
}

Outcome gd_correspondence() {
  Outcome o;
  o.require(gd_from_quadratic(quadratic_from_gd(virasoro_gd())) == virasoro_gd(), "vir GD round trip");
  o.require(gd_from_quadratic(quadratic_from_gd(heisenberg_virasoro_gd())) == heisenberg_virasoro_gd(),
            "hv GD round trip");
  o.require(quadratic_from_gd(gd_from_quadratic(virasoro())) == virasoro(), "vir algebra round trip");
  o.require(quadratic_from_gd(gd_from_quadratic(heisenberg_virasoro())) == heisenberg_virasoro(),
            "hv algebra round trip");
  o.require(zero_divisor_probe(virasoro_gd()).kind == ZeroDivisorResult::Kind::NoZeroDivisors,
            "vir GD has a zero divisor");
  const ZeroDivisorResult hv = zero_divisor_probe(heisenberg_virasoro_gd());
  o.require(hv.kind == ZeroDivisorResult::Kind::Witness && hv.a == Element::basis(2, 1) &&
                hv.b == Element::basis(2, 1),
            "hv GD witness is not (W, W)");
  return o;
}

Outcome duality() {
  Outcome o;
  std::vector<Representation> reps;
  std::vector<ConformalAlgebra> semis;
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog(name);
    if (!e.algebra) continue;
    const ConformalAlgebra& A = *e.algebra;
    if (A.kind() == AlgebraKind::Lie) {
      reps.push_back(standard_rep(A, StandardRep::Adjoint));
    } else {
      reps.push_back(standard_rep(A, StandardRep::RegularLeft));
      reps.push_back(standard_rep(A, StandardRep::LeftMinusRight));
      reps.push_back(standard_rep(sub_adjacent(A), StandardRep::Adjoint));
      semis.push_back(semidirect(A, standard_rep(A, StandardRep::RegularRight)));
      semis.push_back(lie_double(A));
      semis.push_back(lsc_double(A));
    }
  }
  for (const auto& rep : reps) {
    const Representation dual = dual_rep(rep);
    o.require(check_rep(rep).ok(), "a builtin representation fails");
    o.require(check_rep(dual).ok(), "a dual representation fails");
    semis.push_back(semidirect(rep.algebra(), rep));
    semis.push_back(semidirect(rep.algebra(), dual));
  }
  for (const auto& S : semis) o.require(check_axioms(S).ok(), "a semidirect sum fails its axioms");
  if (o.ok) o.detail = std::to_string(reps.size()) + " representations, " + std::to_string(semis.size()) + " sums";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom suite", axiom_suite},
      {"Rota-Baxter families on HV", rb_families},
      {"induced left-symmetric tables", induced_structures},
      {"CYBE for the skew double", skew_double_cybe},
      {"S-equation for the symmetric double", symmetric_double_s},
      {"O-operators and tensors", o_operator_tensors},
      {"Rota-Baxter operators on Vir are trivial", virasoro_classification},
      {"cocycles from tensors", cocycles},
      {"coefficient window", coefficient_window},
      {"GD correspondence", gd_correspondence},
      {"duals and semidirect sums", duality},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << " [" << secs << " s]\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
