#include "confyb/coeff.hpp"

namespace confyb {

namespace {

Rational factorial(unsigned n) {
  Rational f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

/// k (k-1) ... (k-s+1)
Rational falling(long k, unsigned s) {
  Rational f = 1;
  for (unsigned t = 0; t < s; ++t) f *= Rational(k - static_cast<long>(t));
  return f;
}

bool has_structural_var(const Poly& p) {
  for (const auto& v : p.variables())
    if (is_reserved_var(v)) return true;
  return false;
}

}  // namespace

Rational binomial(long m, unsigned j) { return falling(m, j) / factorial(j); }

// ---------------------------------------------------------------------------
// n-th products
// ---------------------------------------------------------------------------

NthProductTable::NthProductTable(const ConformalAlgebra& algebra) : m_rank(algebra.rank()) {
  const std::size_t n = algebra.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Element e = algebra.table().entry(i, j);
      unsigned top = 0;
      for (const auto& p : e.coeffs) top = std::max(top, p.degree_in("x"));
      std::vector<Element> products;
      if (!e.is_zero())
        for (unsigned k = 0; k <= top; ++k) {
          Element u(n);
          for (std::size_t c = 0; c < n; ++c) u[c] = Poly(factorial(k)) * e[c].coefficient("x", k);
          products.push_back(u);
        }
      m_products[{i, j}] = std::move(products);
    }
}

const std::vector<Element>& NthProductTable::at(std::size_t i, std::size_t j) const { return m_products.at({i, j}); }

Element NthProductTable::reconstruct(std::size_t i, std::size_t j) const {
  Element out(m_rank);
  const auto& products = at(i, j);
  for (unsigned k = 0; k < products.size(); ++k)
    out += (Poly(1 / factorial(k)) * Poly::var("x", k)) * products[k];
  return out;
}

// ---------------------------------------------------------------------------
// Window elements
// ---------------------------------------------------------------------------

WindowElement WindowElement::symbol(std::size_t gen, long index, const Poly& c) {
  WindowElement e;
  e.add(gen, index, c);
  return e;
}

void WindowElement::add(std::size_t gen, long index, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace({gen, index}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

WindowElement& WindowElement::operator+=(const WindowElement& o) {
  for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
  return *this;
}

WindowElement& WindowElement::operator-=(const WindowElement& o) {
  for (const auto& [k, c] : o.terms) add(k.first, k.second, -c);
  return *this;
}

WindowElement operator*(const Poly& c, const WindowElement& e) {
  WindowElement r;
  for (const auto& [k, v] : e.terms) r.add(k.first, k.second, c * v);
  return r;
}

// ---------------------------------------------------------------------------
// Window
// ---------------------------------------------------------------------------

CoeffWindow::CoeffWindow(ConformalAlgebra algebra, long N, std::map<std::string, long> shifts)
    : m_algebra(std::move(algebra)), m_nth(m_algebra), m_N(N), m_shift(m_algebra.rank(), 0) {
  if (N < 0) throw AlgebraError("window size must be nonnegative");
  for (const auto& [name, s] : shifts) m_shift[m_algebra.index_of(name)] = s;
}

bool CoeffWindow::contains(const WindowElement& e) const {
  for (const auto& [k, c] : e.terms)
    if (k.first >= m_algebra.rank() || !in_window(k.second)) return false;
  return true;
}

std::optional<WindowElement> CoeffWindow::expand(const Element& u, long raw_index) const {
  WindowElement out;
  for (std::size_t k = 0; k < u.rank(); ++k) {
    if (u[k].is_zero()) continue;
    const std::set<std::string> dvar{"d"};
    for (const auto& [mono, c] : u[k].coefficients_in(dvar)) {
      if (has_structural_var(c)) throw AlgebraError("coefficient window needs x-free elements");
      const unsigned s = mono.degree_in("d");
      // (d^s e)_K = (-1)^s K (K-1) ... (K-s+1) e_{K-s}
      Rational scale = falling(raw_index, s);
      if (s % 2) scale = -scale;
      if (scale == 0) continue;
      const long shown = raw_index - static_cast<long>(s) - m_shift[k];
      if (!in_window(shown)) return std::nullopt;
      out.add(k, shown, Poly(scale) * c);
    }
  }
  return out;
}

std::optional<WindowElement> coeff_bracket(const CoeffWindow& w, const WindowElement& a, const WindowElement& b) {
  if (!w.contains(a) || !w.contains(b)) return std::nullopt;
  WindowElement out;
  for (const auto& [ka, ca] : a.terms) {
    const long m = ka.second + w.m_shift[ka.first];
    for (const auto& [kb, cb] : b.terms) {
      const long n = kb.second + w.m_shift[kb.first];
      const auto& products = w.m_nth.at(ka.first, kb.first);
      for (unsigned j = 0; j < products.size(); ++j) {
        const Rational c = binomial(m, j);
        if (c == 0 || products[j].is_zero()) continue;
        auto part = w.expand(products[j], m + n - static_cast<long>(j));
        if (!part) return std::nullopt;
        out += (Poly(c) * ca * cb) * *part;
      }
    }
  }
  return out;
}

std::optional<WindowElement> lift(const CoeffWindow& w, const ModuleMap& T, const WindowElement& a) {
  const std::size_t n = w.algebra().rank();
  if (T.source_rank() != n || T.target_rank() != n) throw AlgebraError("operator shape does not match algebra");
  WindowElement out;
  for (const auto& [k, c] : a.terms) {
    auto part = w.expand(T.apply(Element::basis(n, k.first)), k.second + w.shift(k.first));
    if (!part) return std::nullopt;
    out += c * *part;
  }
  return out;
}

std::string CoeffWindow::render(const WindowElement& e) const {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : e.terms) {
    if (!s.empty()) s += " + ";
    std::string coeff = c.to_string();
    if (c.terms().size() > 1) coeff = "(" + coeff + ")";
    s += (c == Poly(1) ? "" : coeff + "*") + m_algebra.basis()[k.first] + "_" + std::to_string(k.second);
  }
  return s;
}

Report window_checks(const CoeffWindow& w, const std::optional<ModuleMap>& T, const Poly& weight) {
  const ConformalAlgebra& A = w.algebra();
  const std::size_t n = A.rank();
  const long N = w.size();
  std::vector<WindowElement> symbols;
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < n; ++g)
    for (long i = -N; i <= N; ++i) {
      symbols.push_back(WindowElement::symbol(g, i));
      labels.push_back(A.basis()[g] + "_" + std::to_string(i));
    }
  const std::size_t s = symbols.size();

  // cache of symbol products
  std::vector<std::optional<WindowElement>> prod(s * s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) prod[i * s + j] = coeff_bracket(w, symbols[i], symbols[j]);

  auto add_residual = [&](Check& c, const std::string& label, const WindowElement& res) {
    for (const auto& [k, v] : res.terms)
      c.add(label + " -> " + A.basis()[k.first] + "_" + std::to_string(k.second), v);
  };

  Report report;
  const bool lie = A.kind() == AlgebraKind::Lie;
  if (lie) {
    Check& anti = report.add_check("window_antisymmetry");
    std::size_t count = 0;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        if (!prod[i * s + j] || !prod[j * s + i]) continue;
        ++count;
        add_residual(anti, labels[i] + "," + labels[j], *prod[i * s + j] + *prod[j * s + i]);
      }
    anti.notes.push_back(std::to_string(count) + " admissible pairs");
  }

  Check& jac = report.add_check(lie ? "window_jacobi" : "window_left_symmetry");
  std::size_t triples = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t k = 0; k < s; ++k) {
        const auto& ab = prod[i * s + j];
        const auto& bc = prod[j * s + k];
        const auto& ac = prod[i * s + k];
        if (!ab || !bc || !ac) continue;
        std::optional<WindowElement> t1, t2, t3, t4;
        if (lie) {
          t1 = coeff_bracket(w, symbols[i], *bc);
          t2 = coeff_bracket(w, *ab, symbols[k]);
          t3 = coeff_bracket(w, symbols[j], *ac);
          if (!t1 || !t2 || !t3) continue;
          ++triples;
          add_residual(jac, labels[i] + "," + labels[j] + "," + labels[k], *t1 - *t2 - *t3);
        } else {
          const auto& ba = prod[j * s + i];
          if (!ba) continue;
          t1 = coeff_bracket(w, *ab, symbols[k]);
          t2 = coeff_bracket(w, symbols[i], *bc);
          t3 = coeff_bracket(w, *ba, symbols[k]);
          t4 = coeff_bracket(w, symbols[j], *ac);
          if (!t1 || !t2 || !t3 || !t4) continue;
          ++triples;
          add_residual(jac, labels[i] + "," + labels[j] + "," + labels[k], *t1 - *t2 - *t3 + *t4);
        }
      }
  jac.notes.push_back(std::to_string(triples) + " admissible triples");

  if (T) {
    Check& rb = report.add_check("lifted_rota_baxter");
    std::vector<std::optional<WindowElement>> lifted(s);
    for (std::size_t i = 0; i < s; ++i) lifted[i] = lift(w, *T, symbols[i]);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        if (!lifted[i] || !lifted[j] || !prod[i * s + j]) continue;
        auto lhs = coeff_bracket(w, *lifted[i], *lifted[j]);
        auto x1 = coeff_bracket(w, *lifted[i], symbols[j]);
        auto x2 = coeff_bracket(w, symbols[i], *lifted[j]);
        if (!lhs || !x1 || !x2) continue;
        auto r1 = lift(w, *T, *x1 + *x2);
        auto r2 = lift(w, *T, *prod[i * s + j]);
        if (!r1 || !r2) continue;
        ++pairs;
        add_residual(rb, labels[i] + "," + labels[j], *lhs - *r1 - weight * *r2);
      }
    rb.notes.push_back(std::to_string(pairs) + " admissible pairs");
  }
  return report;
}

}  // namespace confyb
