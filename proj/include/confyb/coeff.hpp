#pragma once

// n-th products a_(n)b and finite windows of the coefficient algebra:
//   a_m b_n = sum_j C(m, j) (a_(j) b)_{m+n-j},   (d u)_k = -k u_{k-1}.

#include "confyb/conformal.hpp"
#include "confyb/module_map.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confyb {

/// a_(n) b for basis pairs; entry n is n! times the x^n coefficient.
class NthProductTable {
public:
  explicit NthProductTable(const ConformalAlgebra& algebra);

  const std::vector<Element>& at(std::size_t i, std::size_t j) const;
  /// sum_n x^n / n! a_(n) b
  Element reconstruct(std::size_t i, std::size_t j) const;

private:
  std::size_t m_rank;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Element>> m_products;
};

inline NthProductTable nth_products(const ConformalAlgebra& algebra) { return NthProductTable(algebra); }

/// Finite combination of symbols v_n (generator index, displayed index) with
/// coefficients free of d and x (rationals or parameter polynomials).
struct WindowElement {
  std::map<std::pair<std::size_t, long>, Poly> terms;

  static WindowElement symbol(std::size_t gen, long index, const Poly& c = Poly(1));
  bool is_zero() const { return terms.empty(); }
  void add(std::size_t gen, long index, const Poly& c);
  WindowElement& operator+=(const WindowElement& o);
  WindowElement& operator-=(const WindowElement& o);
  friend WindowElement operator+(WindowElement a, const WindowElement& b) { return a += b; }
  friend WindowElement operator-(WindowElement a, const WindowElement& b) { return a -= b; }
  friend WindowElement operator*(const Poly& c, const WindowElement& e);
  bool operator==(const WindowElement&) const = default;
};

/// Symbols v_n with |n| <= N. A shift s_v presents v_n for the raw symbol
/// v_{n + s_v}, so textbook indexings can be matched.
class CoeffWindow {
public:
  CoeffWindow(ConformalAlgebra algebra, long N, std::map<std::string, long> shifts = {});

  const ConformalAlgebra& algebra() const { return m_algebra; }
  long size() const { return m_N; }
  long shift(std::size_t gen) const { return m_shift.at(gen); }
  bool in_window(long index) const { return index >= -m_N && index <= m_N; }
  bool contains(const WindowElement& e) const;

  /// (p(d) e_k) at raw index K, as displayed symbols; nullopt when a nonzero
  /// term leaves the window.
  std::optional<WindowElement> expand(const Element& u, long raw_index) const;

  std::string render(const WindowElement& e) const;

private:
  ConformalAlgebra m_algebra;
  NthProductTable m_nth;
  long m_N;
  std::vector<long> m_shift;

  friend std::optional<WindowElement> coeff_bracket(const CoeffWindow&, const WindowElement&, const WindowElement&);
};

/// nullopt stands for OutOfWindow.
std::optional<WindowElement> coeff_bracket(const CoeffWindow& w, const WindowElement& a, const WindowElement& b);

/// T(a_n) = T(a)_n, computed on raw indices.
std::optional<WindowElement> lift(const CoeffWindow& w, const ModuleMap& T, const WindowElement& a);

/// Antisymmetry and Jacobi (or left-symmetry) on admissible window symbols;
/// with T, the weight-alpha Rota-Baxter identity of the lift on admissible
/// pairs. Notes record how many pairs/triples were admissible.
Report window_checks(const CoeffWindow& w, const std::optional<ModuleMap>& T = std::nullopt,
                     const Poly& weight = Poly());

/// Generalized binomial coefficient m(m-1)...(m-j+1)/j!.
Rational binomial(long m, unsigned j);

}  // namespace confyb
