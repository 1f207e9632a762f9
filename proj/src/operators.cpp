#include "confyb/operators.hpp"

#include <algorithm>

namespace confyb {

namespace {

const Poly D = Poly::var("d");
const Poly X = Poly::var("x");
const Poly Y = Poly::var("y");

void add_element(Check& check, const std::vector<std::string>& out_names, const std::string& prefix,
                 const Element& residual) {
  for (std::size_t k = 0; k < residual.rank(); ++k) check.add(prefix + " -> " + out_names[k], residual[k]);
}

std::string pair_label(const std::string& a, const std::string& b) { return a + "," + b; }

[[noreturn]] void precondition_failed(const std::string& what, const Report& report) {
  for (const auto& c : report.checks)
    if (!c.ok())
      throw AlgebraError(what + ": " + c.name + " fails at " + c.residuals[0].basis + " with " +
                         c.residuals[0].poly.to_string());
  throw AlgebraError(what);
}

}  // namespace

// ---------------------------------------------------------------------------
// O-operators and Rota-Baxter operators
// ---------------------------------------------------------------------------

Report check_o_operator(const ModuleMap& T, const Representation& rep, bool ker_mode) {
  const ConformalAlgebra& A = rep.algebra();
  if (A.kind() != AlgebraKind::Lie) throw AlgebraError("O-operators are checked over a Lie-kind representation");
  if (T.source_rank() != rep.module_rank() || T.target_rank() != A.rank())
    throw AlgebraError("O-operator shape does not match representation");
  const std::size_t m = rep.module_rank();
  const auto& mnames = rep.module_basis();

  Report report;
  Check& check = report.add_check(ker_mode ? "o_operator_kernel" : "o_operator");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Element u = Element::basis(m, i), v = Element::basis(m, j);
      const Element Tu = T.apply(u), Tv = T.apply(v);
      Element res = bracket(A, Tu, Tv, X) - T.apply(rep.apply(Tu, v, X) - rep.apply(Tv, u, -X - D));
      if (!ker_mode) {
        add_element(check, A.basis(), pair_label(mnames[i], mnames[j]), res);
        continue;
      }
      for (std::size_t k = 0; k < m; ++k)
        add_element(check, mnames, pair_label(mnames[i], mnames[j]) + "," + mnames[k],
                    rep.apply(res, Element::basis(m, k), Y));
    }
  return report;
}

Report check_rota_baxter(const ConformalAlgebra& algebra, const ModuleMap& T, const Poly& weight) {
  const std::size_t n = algebra.rank();
  if (T.source_rank() != n || T.target_rank() != n) throw AlgebraError("Rota-Baxter operator must be square");
  const auto& names = algebra.basis();
  Report report;
  Check& check = report.add_check("rota_baxter");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element a = algebra.basis_element(i), b = algebra.basis_element(j);
      const Element Ta = T.apply(a), Tb = T.apply(b);
      Element res = bracket(algebra, Ta, Tb) - T.apply(bracket(algebra, a, Tb)) - T.apply(bracket(algebra, Ta, b));
      if (!weight.is_zero()) res -= weight * T.apply(bracket(algebra, a, b));
      add_element(check, names, pair_label(names[i], names[j]), res);
    }
  return report;
}

ConformalAlgebra induced_lsc(const ModuleMap& T, const Representation& rep, InducedMode mode) {
  const ConformalAlgebra& A = rep.algebra();
  const std::size_t n = A.rank(), m = rep.module_rank();

  switch (mode) {
    case InducedMode::OProduct: {
      Report pre = check_o_operator(T, rep, true);
      if (!pre.ok()) precondition_failed("not an O-operator modulo the kernel", pre);
      ConformalAlgebra out(AlgebraKind::LeftSymmetric, rep.module_basis(), A.vars());
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          out.set_product(i, j, rep.apply(T.apply(Element::basis(m, i)), Element::basis(m, j), X));
      return out;
    }
    case InducedMode::Bijective: {
      const ModuleMap inv = invert_module_map(T);
      Report pre = check_o_operator(T, rep);
      if (!pre.ok()) precondition_failed("not an O-operator", pre);
      ConformalAlgebra out(AlgebraKind::LeftSymmetric, A.basis(), A.vars());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          out.set_product(i, j, T.apply(rep.apply(A.basis_element(i), inv.apply(A.basis_element(j)), X)));
      return out;
    }
    case InducedMode::RotaBaxter: {
      if (A.kind() != AlgebraKind::Lie || m != n || !(rep.action() == A.table()))
        throw AlgebraError("rb mode needs the adjoint representation of a Lie algebra");
      Report pre = check_rota_baxter(A, T);
      if (!pre.ok()) precondition_failed("not a Rota-Baxter operator of weight 0", pre);
      ConformalAlgebra out(AlgebraKind::LeftSymmetric, A.basis(), A.vars());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          out.set_product(i, j, bracket(A, T.apply(A.basis_element(i)), A.basis_element(j)));
      return out;
    }
  }
  throw AlgebraError("unknown induced mode");
}

// ---------------------------------------------------------------------------
// Forms
// ---------------------------------------------------------------------------

bool CocycleForm::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly evaluate_form(const CocycleForm& form, const Element& u, const Element& v, const Poly& sigma) {
  if (u.rank() != form.rank || v.rank() != form.rank) throw AlgebraError("form evaluated on element of wrong rank");
  Poly out;
  for (std::size_t i = 0; i < form.rank; ++i) {
    if (u[i].is_zero()) continue;
    const Poly ui = u[i].subst("d", -sigma);
    for (std::size_t j = 0; j < form.rank; ++j) {
      if (v[j].is_zero() || form.at(i, j).is_zero()) continue;
      out += ui * v[j].subst("d", sigma) * form.at(i, j).subst("x", sigma);
    }
  }
  return out;
}

CocycleForm cocycle_from_r(const ConformalAlgebra& algebra, const Tensor2& r) {
  if (r.rank() != algebra.rank()) throw AlgebraError("tensor rank does not match algebra rank");
  const TensorParts p = parts(r);
  if (algebra.kind() == AlgebraKind::Lie && !p.is_skew) throw AlgebraError("tensor is not skew-symmetric");
  if (algebra.kind() == AlgebraKind::LeftSymmetric && !p.is_sym) throw AlgebraError("tensor is not symmetric");
  const ModuleMap inv = invert_module_map(t_from_r(r).T0());
  const std::size_t n = algebra.rank();
  CocycleForm form(algebra.kind(), n);
  // {s(d) e_j*, e_k}_x = s(-x) delta_jk
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form.set(i, j, inv.at(i, j).subst("d", -X));
  return form;
}

Report cocycle_check(const ConformalAlgebra& algebra, const CocycleForm& form) {
  if (form.kind != algebra.kind()) throw AlgebraError("form kind does not match algebra kind");
  if (form.rank != algebra.rank()) throw AlgebraError("form rank does not match algebra rank");
  const std::size_t n = algebra.rank();
  const auto& names = algebra.basis();
  const bool lie = algebra.kind() == AlgebraKind::Lie;
  Report report;

  Check& sym = report.add_check(lie ? "antisymmetry" : "symmetry");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Poly flipped = form.at(j, i).subst("x", -X);
      sym.add(pair_label(names[i], names[j]), lie ? form.at(i, j) + flipped : form.at(i, j) - flipped);
    }

  Check& cocycle = report.add_check("cocycle");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Element a = algebra.basis_element(i), b = algebra.basis_element(j), c = algebra.basis_element(k);
        Poly res;
        if (lie) {
          res = evaluate_form(form, a, bracket(algebra, b, c, Y), X) -
                evaluate_form(form, b, bracket(algebra, a, c, X), Y) -
                evaluate_form(form, bracket(algebra, a, b, X), c, X + Y);
        } else {
          res = evaluate_form(form, bracket(algebra, a, b, X), c, X + Y) -
                evaluate_form(form, a, bracket(algebra, b, c, Y), X) -
                evaluate_form(form, bracket(algebra, b, a, Y), c, X + Y) +
                evaluate_form(form, b, bracket(algebra, a, c, X), Y);
        }
        cocycle.add(basis_label(names, {i, j, k}), res);
      }
  return report;
}

ModuleMap form_matrix(const BilinearForm& B) {
  ModuleMap m(B.rank, B.rank);
  for (std::size_t i = 0; i < B.rank; ++i)
    for (std::size_t j = 0; j < B.rank; ++j) m.set(i, j, B.at(i, j).subst("x", -D));
  return m;
}

ModuleMap p_zero_from_r(const BilinearForm& B, const Tensor2& r) {
  const std::size_t n = B.rank;
  if (r.rank() != n) throw AlgebraError("tensor rank does not match form rank");
  // <r, e_k (x) e_l>_(x,y) = sum f_ij(-x, -y) B_ik(x) B_jl(y)
  std::vector<Poly> q(n * n);
  for (const auto& [ij, f] : r.entries()) {
    const auto [i, j] = ij;
    const Poly fv = f.subst(std::map<std::string, Poly>{{"d1", -X}, {"d2", -Y}});
    for (std::size_t k = 0; k < n; ++k) {
      if (B.at(i, k).is_zero()) continue;
      for (std::size_t l = 0; l < n; ++l)
        if (!B.at(j, l).is_zero()) q[k * n + l] += fv * B.at(i, k) * B.at(j, l).subst("x", Y);
    }
  }
  // B(y) inverted over Q[y]
  ModuleMap By(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) By.set(i, j, B.at(i, j).subst("x", Y));
  const ModuleMap Binv = invert_module_map(By);
  // h(x, y) = q(x, y) B(y)^-1 equals p(-y, x + y); P_0(e_k) = sum_m p_km(d, 0) e_m
  ModuleMap P0(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m) {
      Poly h;
      for (std::size_t l = 0; l < n; ++l) h += q[k * n + l] * Binv.at(l, m);
      P0.set(k, m, h.subst(std::map<std::string, Poly>{{"x", D}, {"y", -D}}));
    }
  return P0;
}

Report invariant_form_suite(const ConformalAlgebra& algebra, const BilinearForm& B,
                            const std::optional<Tensor2>& r) {
  if (algebra.kind() != AlgebraKind::Lie) throw AlgebraError("invariant forms are checked on Lie algebras");
  if (B.rank != algebra.rank()) throw AlgebraError("form rank does not match algebra rank");
  const std::size_t n = algebra.rank();
  const auto& names = algebra.basis();
  const ProductTable& P = algebra.table();
  Report report;

  Check& sym = report.add_check("symmetry");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sym.add(pair_label(names[i], names[j]), B.at(i, j) - B.at(j, i).subst("x", -X));

  // <[a_y b], c>_x - <a, [b_{x-d} c]>_y
  Check& inv = report.add_check("invariance");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Poly res;
        for (std::size_t k = 0; k < n; ++k) {
          const Poly left = P.at(i, j, k);
          if (!left.is_zero())
            res += left.subst(std::map<std::string, Poly>{{"d", -X}, {"x", Y}}) * B.at(k, l);
          const Poly right = P.at(j, l, k);
          if (!right.is_zero())
            res -= right.subst(std::map<std::string, Poly>{{"d", Y}, {"x", X - Y}}) * B.at(i, k).subst("x", Y);
        }
        inv.add(basis_label(names, {i, j, l}), res);
      }

  Check& nondeg = report.add_check("nondegeneracy");
  const Poly det = determinant(form_matrix(B));
  const bool degenerate = det.is_zero() || !det.is_constant();
  if (det.is_zero())
    nondeg.add("det", Poly(1));
  else if (!det.is_constant())
    nondeg.add("det", det);
  nondeg.notes.push_back("determinant " + det.to_string());

  if (r) {
    if (degenerate) throw NotInvertible("form is degenerate; P^r is undefined");
    const ModuleMap P0 = p_zero_from_r(B, *r);
    Report rb = check_rota_baxter(algebra, P0);
    rb.checks[0].name = "p0_rota_baxter";
    report.append(rb);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Constraint systems
// ---------------------------------------------------------------------------

namespace {

const std::set<std::string>& structural_vars() {
  static const std::set<std::string> vars = [] {
    std::set<std::string> s;
    for (const auto& v : VarTable::slot_partials()) s.insert(v);
    for (const auto& v : VarTable::lambda_vars()) s.insert(v);
    return s;
  }();
  return vars;
}

}  // namespace

std::vector<Poly> PolySystem::expanded() const {
  std::vector<Poly> out;
  for (const auto& eq : equations)
    for (const auto& [mono, coeff] : eq.coefficients_in(structural_vars()))
      if (!coeff.is_zero()) out.push_back(coeff);
  return out;
}

std::string rb_unknown(std::size_t i, std::size_t j, std::size_t p) {
  return "t_" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "_" + std::to_string(p);
}

ModuleMap generic_module_map(std::size_t rank, unsigned degree) {
  ModuleMap T(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      Poly e;
      for (unsigned p = 0; p <= degree; ++p) e += Poly::var(rb_unknown(i, j, p)) * D.pow(p);
      T.set(i, j, e);
    }
  return T;
}

PolySystem rb_constraints(const ConformalAlgebra& algebra, unsigned degree, const Poly& weight) {
  const std::size_t n = algebra.rank();
  PolySystem sys;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (unsigned p = 0; p <= degree; ++p) sys.unknowns.push_back(rb_unknown(i, j, p));
  const Report report = check_rota_baxter(algebra, generic_module_map(n, degree), weight);
  for (const auto& c : report.checks)
    for (const auto& res : c.residuals) sys.equations.push_back(res.poly);
  sys.equations = sys.expanded();
  return sys;
}

SolveResult solve_squares(const PolySystem& sys) {
  const std::set<std::string> unknowns(sys.unknowns.begin(), sys.unknowns.end());
  SolveResult result;
  std::vector<Poly> eqs = sys.expanded();

  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<Poly> next;
    for (const auto& raw : eqs) {
      const Poly eq = raw.subst(result.assignment);
      if (eq.is_zero()) continue;
      if (eq.is_constant()) throw Inconsistent("equation reduces to nonzero constant " + eq.to_string());
      next.push_back(eq);
    }
    eqs = std::move(next);

    for (const auto& eq : eqs) {
      // q * v^k = 0 forces v = 0
      if (eq.terms().size() == 1) {
        const Monomial& mono = eq.terms().begin()->first;
        if (mono.factors().size() == 1 && unknowns.count(mono.factors()[0].first)) {
          result.assignment[mono.factors()[0].first] = Poly();
          progress = true;
          break;
        }
      }
      // linear in one unknown with a constant coefficient
      bool eliminated = false;
      for (const auto& v : eq.variables()) {
        if (!unknowns.count(v) || eq.degree_in(v) != 1) continue;
        const Poly coeff = eq.coefficient(v, 1);
        if (!coeff.is_constant()) continue;
        const Poly rest = eq - coeff * Poly::var(v);
        result.assignment[v] = Poly(-1 / coeff.constant_term()) * rest;
        eliminated = true;
        break;
      }
      if (eliminated) {
        progress = true;
        break;
      }
    }
    if (progress) {
      // keep earlier values expressed in the remaining unknowns
      for (auto& [name, value] : result.assignment) value = value.subst(result.assignment);
    }
  }

  result.remaining = eqs;
  result.solved = eqs.empty() && std::all_of(sys.unknowns.begin(), sys.unknowns.end(), [&](const std::string& u) {
                    auto it = result.assignment.find(u);
                    return it != result.assignment.end() && it->second.is_constant();
                  });
  return result;
}

}  // namespace confyb
