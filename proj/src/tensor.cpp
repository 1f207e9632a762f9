#include "confyb/tensor.hpp"

#include <algorithm>

namespace confyb {

namespace {

const Poly D = Poly::var("d");
const Poly X = Poly::var("x");
const Poly D1 = Poly::var("d1");
const Poly D2 = Poly::var("d2");
const Poly D3 = Poly::var("d3");

using Subst = std::map<std::string, Poly>;

/// Coefficient f(d1, d2) re-expressed with d1 := s1, d2 := s2.
Poly slots(const Poly& f, const Poly& s1, const Poly& s2) { return f.subst(Subst{{"d1", s1}, {"d2", s2}}); }

/// Structure constant P(d, x) with d := slot variable, x := mu.
Poly at_slot(const Poly& p, const Poly& slot, const Poly& mu) { return p.subst(Subst{{"d", slot}, {"x", mu}}); }

}  // namespace

// ---------------------------------------------------------------------------
// Tensor2 / Tensor3
// ---------------------------------------------------------------------------

Poly Tensor2::at(std::size_t i, std::size_t j) const {
  auto it = m_entries.find({i, j});
  return it == m_entries.end() ? Poly() : it->second;
}

void Tensor2::set(std::size_t i, std::size_t j, const Poly& p) {
  if (i >= m_rank || j >= m_rank) throw AlgebraError("tensor index out of range");
  if (p.is_zero())
    m_entries.erase({i, j});
  else
    m_entries[{i, j}] = p;
}

void Tensor2::add(std::size_t i, std::size_t j, const Poly& p) { set(i, j, at(i, j) + p); }

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  if (o.m_rank != m_rank) throw AlgebraError("tensor rank mismatch");
  for (const auto& [k, p] : o.m_entries) add(k.first, k.second, p);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  if (o.m_rank != m_rank) throw AlgebraError("tensor rank mismatch");
  for (const auto& [k, p] : o.m_entries) add(k.first, k.second, -p);
  return *this;
}

Tensor2 Tensor2::subst(const std::map<std::string, Poly>& values) const {
  Tensor2 r(m_rank);
  for (const auto& [k, p] : m_entries) r.set(k.first, k.second, p.subst(values));
  return r;
}

Poly Tensor3::at(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = m_entries.find({i, j, k});
  return it == m_entries.end() ? Poly() : it->second;
}

void Tensor3::add(std::size_t i, std::size_t j, std::size_t k, const Poly& p) {
  if (p.is_zero()) return;
  Key key{i, j, k};
  auto [it, inserted] = m_entries.try_emplace(key, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) m_entries.erase(it);
  }
}

Tensor3 normal_form3(const Tensor3& t) {
  Tensor3 r(t.rank());
  const Poly diag = -D1 - D2;
  for (const auto& [k, p] : t.entries()) r.add(k[0], k[1], k[2], p.subst("d3", diag));
  r.mark_reduced();
  return r;
}

TensorParts parts(const Tensor2& r) {
  TensorParts out;
  out.r21 = Tensor2(r.rank());
  for (const auto& [k, p] : r.entries()) out.r21.set(k.second, k.first, slots(p, D2, D1));
  out.skew = r - out.r21;
  out.sym = r + out.r21;
  out.is_skew = out.sym.is_zero();
  out.is_sym = out.skew.is_zero();
  return out;
}

// ---------------------------------------------------------------------------
// Yang-Baxter type equations
// ---------------------------------------------------------------------------

Tensor3 cybe_residual(const ConformalAlgebra& lie, const Tensor2& r) {
  if (r.rank() != lie.rank()) throw AlgebraError("tensor rank does not match algebra rank");
  const std::size_t n = lie.rank();
  const ProductTable& P = lie.table();
  Tensor3 t(n);

  for (const auto& [ij, f1] : r.entries()) {
    const auto [i, j] = ij;
    // first factor seen from each term
    const Poly f1_first = slots(f1, -D2, D2);       // a_i bracketed in slot 1 at mu = d2
    const Poly f1_split = slots(f1, D1, D2 + D3);   // b_i is the right argument at mu = d3 / d2
    for (const auto& [kl, f2] : r.entries()) {
      const auto [k, l] = kl;
      // [a_i mu a_j] (x) b_i (x) b_j at mu = d2
      {
        const Poly coeff = f1_first * slots(f2, D1 + D2, D3);
        const Element e = P.entry(i, k);
        for (std::size_t m = 0; m < n; ++m)
          if (!e[m].is_zero()) t.add(m, j, l, coeff * at_slot(e[m], D1, D2));
      }
      // - a_i (x) [a_j mu b_i] (x) b_j at mu = d3
      {
        const Poly coeff = f1_split * slots(f2, -D3, D3);
        const Element e = P.entry(k, j);
        for (std::size_t m = 0; m < n; ++m)
          if (!e[m].is_zero()) t.add(i, m, l, -(coeff * at_slot(e[m], D2, D3)));
      }
      // - a_i (x) a_j (x) [b_j mu b_i] at mu = d2
      {
        const Poly coeff = f1_split * slots(f2, D2, -D2);
        const Element e = P.entry(l, j);
        for (std::size_t m = 0; m < n; ++m)
          if (!e[m].is_zero()) t.add(i, k, m, -(coeff * at_slot(e[m], D3, D2)));
      }
    }
  }
  return normal_form3(t);
}

Tensor3 s_residual(const ConformalAlgebra& lsc, const Tensor2& r) {
  if (lsc.kind() != AlgebraKind::LeftSymmetric) throw AlgebraError("S-equation needs a left-symmetric algebra");
  if (r.rank() != lsc.rank()) throw AlgebraError("tensor rank does not match algebra rank");
  const std::size_t n = lsc.rank();
  const ProductTable& P = lsc.table();
  // sub-adjacent bracket, without re-verifying left-symmetry
  ProductTable Q(n, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) Q.set(a, b, P.entry(a, b) - P.entry(b, a).subst("x", -X - D));

  Tensor3 t(n);
  // r = sum r_i (x) l_i; outer loop entry (a, b) is (r_i, l_i), inner (c, e) is (r_j, l_j)
  for (const auto& [ab, f1] : r.entries()) {
    const auto [a, b] = ab;
    const Poly f1_right = slots(f1, D1 + D2, D3);
    const Poly f1_third = slots(f1, D1, -D1);
    for (const auto& [ce, f2] : r.entries()) {
      const auto [c, e] = ce;
      // (l_j mu r_i) (x) r_j (x) l_i at mu = d2
      {
        const Poly coeff = f1_right * slots(f2, D2, -D2);
        const Element v = P.entry(e, a);
        for (std::size_t m = 0; m < n; ++m)
          if (!v[m].is_zero()) t.add(m, c, b, coeff * at_slot(v[m], D1, D2));
      }
      // - r_j (x) (l_j mu r_i) (x) l_i at mu = d1
      {
        const Poly coeff = f1_right * slots(f2, D1, -D1);
        const Element v = P.entry(e, a);
        for (std::size_t m = 0; m < n; ++m)
          if (!v[m].is_zero()) t.add(c, m, b, -(coeff * at_slot(v[m], D2, D1)));
      }
      // - r_i (x) r_j (x) [l_i mu l_j] at mu = d1
      {
        const Poly coeff = f1_third * slots(f2, D2, D1 + D3);
        const Element v = Q.entry(b, e);
        for (std::size_t m = 0; m < n; ++m)
          if (!v[m].is_zero()) t.add(a, c, m, -(coeff * at_slot(v[m], D3, D1)));
      }
    }
  }
  return normal_form3(t);
}

// ---------------------------------------------------------------------------
// Conformal linear maps
// ---------------------------------------------------------------------------

ConformalLinearMap::ConformalLinearMap(std::size_t source_rank, std::size_t target_rank)
    : m_source(source_rank), m_target(target_rank), m_entries(source_rank * target_rank) {}

ConformalLinearMap ConformalLinearMap::from_module_map(const ModuleMap& m) {
  ConformalLinearMap t(m.source_rank(), m.target_rank());
  for (std::size_t i = 0; i < m.source_rank(); ++i)
    for (std::size_t j = 0; j < m.target_rank(); ++j) t.set(i, j, m.at(i, j));
  return t;
}

bool ConformalLinearMap::is_zero() const {
  return std::all_of(m_entries.begin(), m_entries.end(), [](const Poly& p) { return p.is_zero(); });
}

Element ConformalLinearMap::apply(const Element& v, const Poly& sigma) const {
  if (v.rank() != m_source) throw AlgebraError("conformal linear map applied to element of wrong rank");
  Element out(m_target);
  // T_sigma(d v) = (d + sigma) T_sigma(v)
  for (std::size_t i = 0; i < m_source; ++i) {
    if (v[i].is_zero()) continue;
    const Poly shifted = v[i].subst("d", D + sigma);
    for (std::size_t j = 0; j < m_target; ++j)
      if (!at(i, j).is_zero()) out[j] += shifted * at(i, j).subst("x", sigma);
  }
  return out;
}

ModuleMap ConformalLinearMap::T0() const {
  ModuleMap m(m_source, m_target);
  for (std::size_t i = 0; i < m_source; ++i)
    for (std::size_t j = 0; j < m_target; ++j) m.set(i, j, at(i, j).subst("x", Poly()));
  return m;
}

ConformalLinearMap t_from_r(const Tensor2& r) {
  ConformalLinearMap t(r.rank(), r.rank());
  for (const auto& [ik, f] : r.entries()) t.set(ik.first, ik.second, slots(f, -X - D, D));
  return t;
}

Tensor2 r_from_t(const ConformalLinearMap& t, const Representation& rep, RMode mode) {
  const std::size_t n = rep.algebra().rank(), m = rep.module_rank();
  if (t.source_rank() != m || t.target_rank() != n)
    throw AlgebraError("conformal linear map shape does not match representation");
  Tensor2 r(n + m);
  const Subst to_slots{{"x", -D1 - D2}, {"d", D1}};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!t.at(i, j).is_zero()) r.set(j, n + i, t.at(i, j).subst(to_slots));
  switch (mode) {
    case RMode::Raw: return r;
    case RMode::Skew: return parts(r).skew;
    case RMode::Sym: return parts(r).sym;
  }
  return r;
}

Tensor2 cobracket_from_r(const ConformalAlgebra& algebra, const Tensor2& r, const Element& a) {
  if (r.rank() != algebra.rank() || a.rank() != algebra.rank()) throw AlgebraError("rank mismatch");
  const std::size_t n = algebra.rank();
  const ProductTable& P = algebra.table();
  const Poly lam = -D1 - D2;
  Tensor2 out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].is_zero()) continue;
    // a d-power on the acting element contributes (-x)^p
    const Poly ak = a[k].subst("d", -lam);
    for (const auto& [ij, f] : r.entries()) {
      const auto [i, j] = ij;
      // action on the first slot: d1 -> x + d1
      const Poly first = ak * f.subst("d1", lam + D1);
      const Element e1 = P.entry(k, i);
      for (std::size_t m = 0; m < n; ++m)
        if (!e1[m].is_zero()) out.add(m, j, first * at_slot(e1[m], D1, lam));
      // action on the second slot: d2 -> x + d2
      const Poly second = ak * f.subst("d2", lam + D2);
      const Element e2 = P.entry(k, j);
      for (std::size_t m = 0; m < n; ++m)
        if (!e2[m].is_zero()) out.add(i, m, second * at_slot(e2[m], D2, lam));
    }
  }
  return out;
}

std::string describe(const Tensor3& t, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& [k, p] : t.entries()) {
    if (!s.empty()) s += "; ";
    s += names.at(k[0]) + "," + names.at(k[1]) + "," + names.at(k[2]) + " -> " + p.to_string();
  }
  return s.empty() ? "0" : s;
}

}  // namespace confyb
