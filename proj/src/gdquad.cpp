#include "confyb/gdquad.hpp"

#include "confyb/operators.hpp"

#include <algorithm>
#include <cstdlib>

namespace confyb {

namespace {

const Poly D = Poly::var("d");
const Poly X = Poly::var("x");

void add_element(Check& check, const std::vector<std::string>& names, const std::string& prefix,
                 const Element& residual) {
  for (std::size_t k = 0; k < residual.rank(); ++k) check.add(prefix + " -> " + names[k], residual[k]);
}

bool has_structural_var(const Poly& p) {
  for (const auto& v : p.variables())
    if (is_reserved_var(v)) return true;
  return false;
}

}  // namespace

GDBialgebra::GDBialgebra(std::vector<std::string> names, VarTable v) : basis(std::move(names)), vars(std::move(v)) {
  if (basis.empty()) throw AlgebraError("GD bialgebra needs at least one basis element");
  circ = ProductTable(dim(), dim(), dim());
  lie = ProductTable(dim(), dim(), dim());
}

std::size_t GDBialgebra::index_of(const std::string& name) const {
  auto it = std::find(basis.begin(), basis.end(), name);
  if (it == basis.end()) throw AlgebraError("unknown basis element '" + name + "'");
  return static_cast<std::size_t>(it - basis.begin());
}

Element GDBialgebra::product(const ProductTable& table, const Element& a, const Element& b) const {
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      out += (a[i] * b[j]) * table.entry(i, j);
    }
  }
  return out;
}

Element GDBialgebra::star(const Element& a, const Element& b) const {
  return product(circ, a, b) + product(circ, b, a);
}

Report check_gd(const GDBialgebra& V) {
  const std::size_t n = V.dim();
  const auto& names = V.basis;
  auto circ = [&](const Element& a, const Element& b) { return V.product(V.circ, a, b); };
  auto br = [&](const Element& a, const Element& b) { return V.product(V.lie, a, b); };

  Report report;
  Check& right_comm = report.add_check("novikov_right_commutative");
  Check& left_sym = report.add_check("novikov_left_symmetric");
  Check& antisym = report.add_check("lie_antisymmetry");
  Check& jacobi = report.add_check("lie_jacobi");
  Check& compat = report.add_check("compatibility");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element a = Element::basis(n, i), b = Element::basis(n, j);
      add_element(antisym, names, basis_label(names, {i, j}), br(a, b) + br(b, a));
      for (std::size_t k = 0; k < n; ++k) {
        const Element c = Element::basis(n, k);
        const std::string label = basis_label(names, {i, j, k});
        add_element(right_comm, names, label, circ(circ(a, b), c) - circ(circ(a, c), b));
        add_element(left_sym, names, label,
                    circ(circ(a, b), c) - circ(a, circ(b, c)) - circ(circ(b, a), c) + circ(b, circ(a, c)));
        add_element(jacobi, names, label, br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b)));
        add_element(compat, names, label,
                    br(circ(a, b), c) + circ(br(a, b), c) - circ(a, br(b, c)) - br(circ(a, c), b) -
                        circ(br(a, c), b));
      }
    }
  return report;
}

ConformalAlgebra quadratic_from_gd(const GDBialgebra& V) {
  const std::size_t n = V.dim();
  ConformalAlgebra R(AlgebraKind::Lie, V.basis, V.vars);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element a = Element::basis(n, i), b = Element::basis(n, j);
      R.set_product(i, j, D * V.product(V.circ, b, a) + X * V.star(a, b) + V.product(V.lie, b, a));
    }
  return R;
}

GDBialgebra gd_from_quadratic(const ConformalAlgebra& R) {
  if (R.kind() != AlgebraKind::Lie) throw NotQuadratic("only Lie conformal algebras can be quadratic");
  const std::size_t n = R.rank();
  GDBialgebra V(R.basis(), R.vars());
  std::vector<Poly> star(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Poly p = R.product(i, j, k);
        const std::string where = R.basis()[i] + "," + R.basis()[j] + " -> " + R.basis()[k];
        for (const auto& v : p.variables())
          if (is_reserved_var(v) && v != "d" && v != "x")
            throw NotQuadratic("bracket " + where + " uses variable " + v);
        const Poly u = p.coefficient("d", 1), s = p.coefficient("x", 1);
        const Poly w = p.coefficient("d", 0).coefficient("x", 0);
        if (!(u.subst("x", Poly()) == u) || !(D * u + X * s + w == p))
          throw NotQuadratic("bracket " + where + " = " + p.to_string() + " is not of the form d*u + x*v + w");
        // [e_i x e_j] = d (e_j o e_i) + x (e_i * e_j) + [e_j, e_i]
        V.circ.set(j, i, k, u);
        V.lie.set(j, i, k, w);
        star[(i * n + j) * n + k] = s;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!(star[(i * n + j) * n + k] == V.circ.at(i, j, k) + V.circ.at(j, i, k)))
          throw NotQuadratic("x-part of " + R.basis()[i] + "," + R.basis()[j] +
                             " is not the symmetrized d-part");
  return V;
}

std::string to_string(ZeroDivisorResult::Kind k) {
  switch (k) {
    case ZeroDivisorResult::Kind::NoZeroDivisors: return "no_zero_divisors";
    case ZeroDivisorResult::Kind::Witness: return "witness";
    case ZeroDivisorResult::Kind::Unknown: return "unknown";
  }
  return "unknown";
}

ZeroDivisorResult zero_divisor_probe(const GDBialgebra& V, int bound) {
  const std::size_t n = V.dim();
  ZeroDivisorResult result;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!V.circ.at(i, j, k).is_constant()) return result;  // symbolic table: undecided

  if (n == 1) {
    const Element e = Element::basis(1, 0);
    if (V.star(e, e).is_zero()) {
      result.kind = ZeroDivisorResult::Kind::Witness;
      result.a = result.b = e;
    } else {
      result.kind = ZeroDivisorResult::Kind::NoZeroDivisors;
    }
    return result;
  }

  // all nonzero integer vectors in [-bound, bound]^n, small and positive first
  std::vector<std::vector<int>> vecs;
  std::vector<int> cur(n, -bound);
  while (true) {
    if (std::any_of(cur.begin(), cur.end(), [](int c) { return c != 0; })) vecs.push_back(cur);
    std::size_t p = 0;
    while (p < n && cur[p] == bound) cur[p++] = -bound;
    if (p == n) break;
    ++cur[p];
  }
  auto key = [](const std::vector<int>& v) {
    int l1 = 0, neg = 0;
    for (int c : v) {
      l1 += std::abs(c);
      neg += c < 0;
    }
    std::vector<int> rev(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rev[i] = -v[i];
    return std::make_tuple(l1, neg, rev);
  };
  std::stable_sort(vecs.begin(), vecs.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

  auto to_element = [n](const std::vector<int>& v) {
    Element e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = Poly(static_cast<long>(v[i]));
    return e;
  };
  for (const auto& va : vecs) {
    const Element a = to_element(va);
    for (const auto& vb : vecs) {
      const Element b = to_element(vb);
      if (V.star(a, b).is_zero()) {
        result.kind = ZeroDivisorResult::Kind::Witness;
        result.a = a;
        result.b = b;
        return result;
      }
    }
  }
  return result;
}

Report rb_gd_check(const GDBialgebra& V, const ModuleMap& T, const Poly& weight) {
  const std::size_t n = V.dim();
  if (T.source_rank() != n || T.target_rank() != n) throw AlgebraError("operator must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (has_structural_var(T.at(i, j))) throw AlgebraError("operator on a GD bialgebra must be constant");
  const auto& names = V.basis;

  Report report;
  auto rb = [&](const ProductTable& table, const std::string& name) {
    Check& c = report.add_check(name);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Element a = Element::basis(n, i), b = Element::basis(n, j);
        const Element Ta = T.apply(a), Tb = T.apply(b);
        Element res = V.product(table, Ta, Tb) - T.apply(V.product(table, Ta, b) + V.product(table, a, Tb));
        if (!weight.is_zero()) res -= weight * T.apply(V.product(table, a, b));
        add_element(c, names, basis_label(names, {i, j}), res);
      }
  };
  rb(V.circ, "circ_rota_baxter");
  rb(V.lie, "lie_rota_baxter");

  Report lifted = check_rota_baxter(quadratic_from_gd(V), T, weight);
  report.append(lifted, "lifted_");
  return report;
}

}  // namespace confyb
