#include "confyb/reps.hpp"

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

std::string label(const std::string& a, const std::string& b, const std::string& v) {
  return a + "," + b + "," + v;
}

}  // namespace

Representation::Representation(ConformalAlgebra algebra, std::vector<std::string> module_basis)
    : m_algebra(std::move(algebra)), m_module_basis(std::move(module_basis)) {
  if (m_module_basis.empty()) throw AlgebraError("module needs at least one basis element");
  m_action = ProductTable(m_algebra.rank(), module_rank(), module_rank());
  m_right = ProductTable(m_algebra.rank(), module_rank(), module_rank());
}

std::size_t Representation::module_index(const std::string& name) const {
  auto it = std::find(m_module_basis.begin(), m_module_basis.end(), name);
  if (it == m_module_basis.end()) throw AlgebraError("unknown module basis element '" + name + "'");
  return static_cast<std::size_t>(it - m_module_basis.begin());
}

void Representation::set_right_action(std::size_t i, std::size_t j, std::size_t k, const Poly& p) {
  if (kind() != AlgebraKind::LeftSymmetric)
    throw AlgebraError("right action only exists for left-symmetric modules");
  m_right.set(i, j, k, p);
}

void Representation::set_action(ProductTable t) {
  if (t.left_rank() != m_algebra.rank() || t.right_rank() != module_rank() || t.out_rank() != module_rank())
    throw AlgebraError("action table shape mismatch");
  m_action = std::move(t);
}

void Representation::set_right_action(ProductTable t) {
  if (kind() != AlgebraKind::LeftSymmetric)
    throw AlgebraError("right action only exists for left-symmetric modules");
  if (t.left_rank() != m_algebra.rank() || t.right_rank() != module_rank() || t.out_rank() != module_rank())
    throw AlgebraError("action table shape mismatch");
  m_right = std::move(t);
}

Element Representation::apply(const Element& a, const Element& v, const Poly& sigma) const {
  return act(m_action, a, v, sigma);
}

Representation Representation::subst(const std::map<std::string, Poly>& values) const {
  Representation r = *this;
  r.m_algebra = m_algebra.subst(values);
  r.m_action = m_action.subst(values);
  r.m_right = m_right.subst(values);
  return r;
}

Report check_rep(const Representation& rep) {
  Report report;
  const ConformalAlgebra& A = rep.algebra();
  const auto& names = A.basis();
  const auto& mnames = rep.module_basis();
  const std::size_t n = A.rank(), m = rep.module_rank();
  const Poly lam_mu = X + Y;
  const ProductTable& l = rep.action();

  if (rep.kind() == AlgebraKind::Lie) {
    Check& lm2 = report.add_check("representation");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          const Element a = A.basis_element(i), b = A.basis_element(j);
          const Element v = Element::basis(m, k);
          Element res = act(l, bracket(A, a, b, X), v, lam_mu) - act(l, a, act(l, b, v, Y), X) +
                        act(l, b, act(l, a, v, X), Y);
          add_element(lm2, mnames, label(names[i], names[j], mnames[k]), res);
        }
    return report;
  }

  const ProductTable& r = rep.right_action();
  Check& left = report.add_check("left_module");
  Check& right = report.add_check("right_module");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Element a = A.basis_element(i), b = A.basis_element(j);
        const Element v = Element::basis(m, k);
        Element res1 = act(l, bracket(A, a, b, X), v, lam_mu) - act(l, a, act(l, b, v, Y), X) -
                       act(l, bracket(A, b, a, Y), v, lam_mu) + act(l, b, act(l, a, v, X), Y);
        add_element(left, mnames, label(names[i], names[j], mnames[k]), res1);

        const Poly outer = -X - Y - D;
        const Poly inner = -Y - D;
        Element res2 = act(r, b, act(l, a, v, X), outer) - act(l, a, act(r, b, v, inner), X) -
                       act(r, b, act(r, a, v, X), outer) + act(r, bracket(A, a, b, X), v, inner);
        add_element(right, mnames, label(names[i], names[j], mnames[k]), res2);
      }
  return report;
}

namespace {

/// R_A(e_i)_x e_j = (e_j)_{-x-d} e_i
ProductTable right_multiplication(const ConformalAlgebra& A) {
  const std::size_t n = A.rank();
  ProductTable t(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.set(i, j, A.table().entry(j, i).subst("x", -X - D));
  return t;
}

}  // namespace

Representation standard_rep(const ConformalAlgebra& algebra, StandardRep which) {
  switch (which) {
    case StandardRep::Adjoint: {
      if (algebra.kind() != AlgebraKind::Lie) throw AlgebraError("adjoint representation needs a Lie algebra");
      Representation rep(algebra, algebra.basis());
      rep.set_action(algebra.table());
      return rep;
    }
    case StandardRep::RegularLeft: {
      if (algebra.kind() != AlgebraKind::LeftSymmetric)
        throw AlgebraError("regular_left needs a left-symmetric algebra");
      Representation rep(sub_adjacent(algebra), algebra.basis());
      rep.set_action(algebra.table());
      return rep;
    }
    case StandardRep::RegularRight: {
      if (algebra.kind() != AlgebraKind::LeftSymmetric)
        throw AlgebraError("regular_right needs a left-symmetric algebra");
      Representation rep(algebra, algebra.basis());
      rep.set_action(algebra.table());
      rep.set_right_action(right_multiplication(algebra));
      return rep;
    }
    case StandardRep::LeftMinusRight: {
      if (algebra.kind() != AlgebraKind::LeftSymmetric)
        throw AlgebraError("left_minus_right needs a left-symmetric algebra");
      Representation rep(sub_adjacent(algebra), algebra.basis());
      const std::size_t n = algebra.rank();
      ProductTable r = right_multiplication(algebra);
      ProductTable t(n, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.set(i, j, algebra.table().entry(i, j) - r.entry(i, j));
      rep.set_action(std::move(t));
      return rep;
    }
  }
  throw AlgebraError("unknown standard representation");
}

Representation dual_rep(const Representation& rep) {
  if (rep.kind() != AlgebraKind::Lie) throw AlgebraError("dual representation needs a Lie-kind representation");
  std::vector<std::string> names;
  for (const auto& s : rep.module_basis()) names.push_back(s + "*");
  Representation dual(rep.algebra(), names);
  const std::size_t n = rep.algebra().rank(), m = rep.module_rank();
  // rho*_ijk(d, x) = -rho_ikj(-x-d, x)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Poly p = rep.action().at(i, k, j);
        if (!p.is_zero()) dual.set_action(i, j, k, -p.subst("d", -X - D));
      }
  return dual;
}

Representation left_module(const ConformalAlgebra& lsc, const Representation& lie_rep) {
  if (lsc.kind() != AlgebraKind::LeftSymmetric) throw AlgebraError("left_module needs a left-symmetric algebra");
  if (lie_rep.kind() != AlgebraKind::Lie || lie_rep.algebra().rank() != lsc.rank())
    throw AlgebraError("left_module needs a representation of the sub-adjacent algebra");
  if (!(lie_rep.algebra().table() == sub_adjacent(lsc).table()))
    throw AlgebraError("representation is not over the sub-adjacent algebra");
  Representation rep(lsc, lie_rep.module_basis());
  rep.set_action(lie_rep.action());
  return rep;
}

ConformalAlgebra semidirect(const ConformalAlgebra& algebra, const Representation& rep) {
  if (!(rep.algebra() == algebra)) {
    if (rep.algebra().kind() != algebra.kind() || !(rep.algebra().table() == algebra.table()))
      throw AlgebraError("representation is over a different algebra");
  }
  Report check = check_rep(rep);
  if (!check.ok()) {
    const Check* bad = nullptr;
    for (const auto& c : check.checks)
      if (!c.ok()) bad = &c;
    throw AlgebraError("representation fails " + bad->name + " at " + bad->residuals[0].basis + ": " +
                       bad->residuals[0].poly.to_string());
  }
  const std::size_t n = algebra.rank(), m = rep.module_rank();
  std::vector<std::string> names = algebra.basis();
  for (std::string v : rep.module_basis()) {
    // module names clashing with the algebra (adjoint, regular modules) get primes
    while (std::find(names.begin(), names.end(), v) != names.end()) v += "'";
    names.push_back(v);
  }
  ConformalAlgebra out(algebra.kind(), names, algebra.vars().merged(rep.algebra().vars()));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.set_product(i, j, k, algebra.product(i, j, k));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        // e_i acting on v_j
        out.set_product(i, n + j, n + k, rep.action().at(i, j, k));
        // v_j against e_i: -rho(e_i)_{-x-d} v_j (Lie) or r(e_i)_{-x-d} v_j
        const ProductTable& t = algebra.kind() == AlgebraKind::Lie ? rep.action() : rep.right_action();
        Poly p = t.at(i, j, k).subst("x", -X - D);
        if (algebra.kind() == AlgebraKind::Lie) p = -p;
        out.set_product(n + j, i, n + k, p);
      }
  return out;
}

}  // namespace confyb
