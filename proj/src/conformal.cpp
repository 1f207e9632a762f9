#include "confyb/conformal.hpp"

#include <algorithm>

namespace confyb {

namespace {

const Poly D = Poly::var("d");
const Poly X = Poly::var("x");
const Poly Y = Poly::var("y");

void require_same_rank(const Element& a, const Element& b) {
  if (a.rank() != b.rank()) throw AlgebraError("rank mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------
// Element
// ---------------------------------------------------------------------------

Element Element::basis(std::size_t rank, std::size_t i, const Poly& c) {
  Element e(rank);
  e.coeffs.at(i) = c;
  return e;
}

bool Element::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Poly& p) { return p.is_zero(); });
}

Element& Element::operator+=(const Element& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

Element operator*(const Poly& c, const Element& e) {
  Element r = e;
  for (auto& p : r.coeffs) p = c * p;
  return r;
}

Element Element::subst(const std::string& var, const Poly& q) const {
  Element r = *this;
  for (auto& p : r.coeffs) p = p.subst(var, q);
  return r;
}

Element Element::subst(const std::map<std::string, Poly>& values) const {
  Element r = *this;
  for (auto& p : r.coeffs) p = p.subst(values);
  return r;
}

// ---------------------------------------------------------------------------
// ProductTable
// ---------------------------------------------------------------------------

Poly ProductTable::at(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = m_entries.find({i, j});
  return it == m_entries.end() ? Poly() : it->second.at(k);
}

Element ProductTable::entry(std::size_t i, std::size_t j) const {
  auto it = m_entries.find({i, j});
  return it == m_entries.end() ? Element(m_out) : Element(it->second);
}

void ProductTable::set(std::size_t i, std::size_t j, std::size_t k, const Poly& p) {
  if (i >= m_left || j >= m_right || k >= m_out) throw AlgebraError("product index out of range");
  auto& v = m_entries[{i, j}];
  if (v.empty()) v.resize(m_out);
  v[k] = p;
  if (std::all_of(v.begin(), v.end(), [](const Poly& q) { return q.is_zero(); }))
    m_entries.erase({i, j});
}

void ProductTable::set(std::size_t i, std::size_t j, const Element& e) {
  if (e.rank() != m_out) throw AlgebraError("product output rank mismatch");
  for (std::size_t k = 0; k < m_out; ++k) set(i, j, k, e[k]);
}

ProductTable ProductTable::subst(const std::map<std::string, Poly>& values) const {
  ProductTable r(m_left, m_right, m_out);
  for (const auto& [ij, v] : m_entries)
    for (std::size_t k = 0; k < v.size(); ++k) r.set(ij.first, ij.second, k, v[k].subst(values));
  return r;
}

Element act(const ProductTable& table, const Element& a, const Element& b, const Poly& sigma) {
  if (a.rank() != table.left_rank() || b.rank() != table.right_rank())
    throw AlgebraError("rank mismatch in product");
  Element out(table.out_rank());
  const Poly left_shift = -sigma;
  const Poly right_shift = sigma + D;
  std::vector<Poly> bs(b.rank());
  for (std::size_t j = 0; j < b.rank(); ++j)
    if (!b[j].is_zero()) bs[j] = b[j].subst("d", right_shift);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i].is_zero()) continue;
    const Poly ai = a[i].subst("d", left_shift);
    for (std::size_t j = 0; j < b.rank(); ++j) {
      if (bs[j].is_zero()) continue;
      const Element e = table.entry(i, j);
      if (e.is_zero()) continue;
      const Poly scale = ai * bs[j];
      for (std::size_t k = 0; k < e.rank(); ++k)
        if (!e[k].is_zero()) out[k] += scale * e[k].subst("x", sigma);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ConformalAlgebra
// ---------------------------------------------------------------------------

std::string to_string(AlgebraKind kind) {
  return kind == AlgebraKind::Lie ? "lie" : "left_symmetric";
}

ConformalAlgebra::ConformalAlgebra(AlgebraKind kind, std::vector<std::string> basis, VarTable vars)
    : m_kind(kind), m_basis(std::move(basis)), m_vars(std::move(vars)) {
  if (m_basis.empty()) throw AlgebraError("algebra needs at least one basis element");
  for (std::size_t i = 0; i < m_basis.size(); ++i)
    for (std::size_t j = i + 1; j < m_basis.size(); ++j)
      if (m_basis[i] == m_basis[j]) throw AlgebraError("duplicate basis name '" + m_basis[i] + "'");
  m_table = ProductTable(rank(), rank(), rank());
}

std::size_t ConformalAlgebra::index_of(const std::string& name) const {
  auto it = std::find(m_basis.begin(), m_basis.end(), name);
  if (it == m_basis.end()) throw AlgebraError("unknown basis element '" + name + "'");
  return static_cast<std::size_t>(it - m_basis.begin());
}

void ConformalAlgebra::set_product(const std::string& a, const std::string& b, const std::string& out,
                                   const Poly& p) {
  m_table.set(index_of(a), index_of(b), index_of(out), p);
}

ConformalAlgebra ConformalAlgebra::subst(const std::map<std::string, Poly>& values) const {
  ConformalAlgebra r = *this;
  r.m_table = m_table.subst(values);
  std::vector<std::string> kept;
  for (const auto& p : m_vars.params())
    if (!values.count(p)) kept.push_back(p);
  r.m_vars = VarTable(kept);
  return r;
}

LambdaElement bracket(const ConformalAlgebra& algebra, const Element& a, const Element& b) {
  return act(algebra.table(), a, b, X);
}

LambdaElement bracket(const ConformalAlgebra& algebra, const Element& a, const Element& b,
                      const Poly& sigma) {
  return act(algebra.table(), a, b, sigma);
}

std::string basis_label(const std::vector<std::string>& names, std::initializer_list<std::size_t> idx) {
  std::string s;
  for (std::size_t i : idx) {
    if (!s.empty()) s += ',';
    s += names.at(i);
  }
  return s;
}

namespace {

void add_element(Check& check, const std::vector<std::string>& out_names, const std::string& prefix,
                 const Element& residual) {
  for (std::size_t k = 0; k < residual.rank(); ++k) check.add(prefix + " -> " + out_names[k], residual[k]);
}

}  // namespace

Report check_axioms(const ConformalAlgebra& algebra) {
  Report report;
  const auto& names = algebra.basis();
  const std::size_t n = algebra.rank();
  const Poly lam_mu = X + Y;

  if (algebra.kind() == AlgebraKind::Lie) {
    Check& skew = report.add_check("skew_symmetry");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // [a_x b] + [b_{-x-d} a]
        Element res = algebra.table().entry(i, j) + algebra.table().entry(j, i).subst("x", -X - D);
        add_element(skew, names, basis_label(names, {i, j}), res);
      }
    Check& jacobi = report.add_check("jacobi");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Element a = algebra.basis_element(i), b = algebra.basis_element(j),
                        c = algebra.basis_element(k);
          Element res = bracket(algebra, a, bracket(algebra, b, c, Y), X) -
                        bracket(algebra, bracket(algebra, a, b, X), c, lam_mu) -
                        bracket(algebra, b, bracket(algebra, a, c, X), Y);
          add_element(jacobi, names, basis_label(names, {i, j, k}), res);
        }
  } else {
    Check& ls = report.add_check("left_symmetry");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Element a = algebra.basis_element(i), b = algebra.basis_element(j),
                        c = algebra.basis_element(k);
          Element res = bracket(algebra, bracket(algebra, a, b, X), c, lam_mu) -
                        bracket(algebra, a, bracket(algebra, b, c, Y), X) -
                        bracket(algebra, bracket(algebra, b, a, Y), c, lam_mu) +
                        bracket(algebra, b, bracket(algebra, a, c, X), Y);
          add_element(ls, names, basis_label(names, {i, j, k}), res);
        }
  }
  return report;
}

ConformalAlgebra sub_adjacent(const ConformalAlgebra& algebra) {
  if (algebra.kind() != AlgebraKind::LeftSymmetric)
    throw AlgebraError("sub-adjacent algebra requires a left-symmetric algebra");
  Report r = check_axioms(algebra);
  if (!r.ok())
    throw AlgebraError("input fails left-symmetry: " + r.checks[0].residuals[0].basis + " residual " +
                       r.checks[0].residuals[0].poly.to_string());
  ConformalAlgebra lie(AlgebraKind::Lie, algebra.basis(), algebra.vars());
  const std::size_t n = algebra.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      lie.set_product(i, j, algebra.table().entry(i, j) - algebra.table().entry(j, i).subst("x", -X - D));
  return lie;
}

}  // namespace confyb
