#pragma once

// Finite free conformal algebras presented by structure constants.
//
// Conventions used throughout the library:
//   d        the derivation acting on the element a polynomial multiplies
//   x, y     the spectral parameters lambda and mu
// An element of a rank-n free C[d]-module is an n-tuple of polynomials in d;
// a "lambda-element" is the same tuple with polynomials also in x (and y).

#include "confyb/poly.hpp"
#include "confyb/report.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace confyb {

class AlgebraError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Tuple of coefficients over a free module basis.
struct Element {
  std::vector<Poly> coeffs;

  Element() = default;
  explicit Element(std::size_t rank) : coeffs(rank) {}
  explicit Element(std::vector<Poly> c) : coeffs(std::move(c)) {}
  static Element basis(std::size_t rank, std::size_t i, const Poly& c = Poly(1));

  std::size_t rank() const { return coeffs.size(); }
  bool is_zero() const;
  const Poly& operator[](std::size_t i) const { return coeffs[i]; }
  Poly& operator[](std::size_t i) { return coeffs[i]; }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Poly& c, const Element& e);

  Element subst(const std::string& var, const Poly& q) const;
  Element subst(const std::map<std::string, Poly>& values) const;

  bool operator==(const Element&) const = default;
};

/// Element-valued polynomial in lambda (and further spectral variables).
using LambdaElement = Element;

/// Products of basis vectors: (e_i)_lambda (f_j) = sum_k P_ijk(d, x) g_k.
/// The left, right and output bases may differ (module actions).
class ProductTable {
public:
  ProductTable() = default;
  ProductTable(std::size_t left, std::size_t right, std::size_t out)
      : m_left(left), m_right(right), m_out(out) {}

  std::size_t left_rank() const { return m_left; }
  std::size_t right_rank() const { return m_right; }
  std::size_t out_rank() const { return m_out; }

  Poly at(std::size_t i, std::size_t j, std::size_t k) const;
  /// Full output vector of the (i, j) product; zero when absent.
  Element entry(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Poly& p);
  void set(std::size_t i, std::size_t j, const Element& e);

  ProductTable subst(const std::map<std::string, Poly>& values) const;
  bool is_zero() const { return m_entries.empty(); }
  bool operator==(const ProductTable&) const = default;

private:
  std::size_t m_left = 0, m_right = 0, m_out = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Poly>> m_entries;
};

/// a_sigma b for a over the left basis and b over the right basis of `table`,
/// with sesquilinear extension: a d-power on `a` contributes (-sigma)^m, a
/// d-power on `b` contributes (sigma + d)^m. `sigma` may itself contain d,
/// read as the derivation acting on the result.
Element act(const ProductTable& table, const Element& a, const Element& b, const Poly& sigma);

enum class AlgebraKind { Lie, LeftSymmetric };

std::string to_string(AlgebraKind kind);

class ConformalAlgebra {
public:
  ConformalAlgebra() = default;
  ConformalAlgebra(AlgebraKind kind, std::vector<std::string> basis, VarTable vars = {});

  AlgebraKind kind() const { return m_kind; }
  std::size_t rank() const { return m_basis.size(); }
  const std::vector<std::string>& basis() const { return m_basis; }
  const VarTable& vars() const { return m_vars; }
  const ProductTable& table() const { return m_table; }
  std::size_t index_of(const std::string& name) const;

  Poly product(std::size_t i, std::size_t j, std::size_t k) const { return m_table.at(i, j, k); }
  void set_product(std::size_t i, std::size_t j, std::size_t k, const Poly& p) { m_table.set(i, j, k, p); }
  void set_product(std::size_t i, std::size_t j, const Element& e) { m_table.set(i, j, e); }
  void set_product(const std::string& a, const std::string& b, const std::string& out, const Poly& p);

  Element basis_element(std::size_t i) const { return Element::basis(rank(), i); }

  /// Replace parameters by values throughout.
  ConformalAlgebra subst(const std::map<std::string, Poly>& values) const;

  bool operator==(const ConformalAlgebra&) const = default;

private:
  AlgebraKind m_kind = AlgebraKind::Lie;
  std::vector<std::string> m_basis;
  VarTable m_vars;
  ProductTable m_table;
};

/// a_lambda b (bracket or product, depending on kind), lambda = x.
LambdaElement bracket(const ConformalAlgebra& algebra, const Element& a, const Element& b);
/// Same with an arbitrary spectral expression.
LambdaElement bracket(const ConformalAlgebra& algebra, const Element& a, const Element& b,
                      const Poly& sigma);

/// Skew-symmetry and Jacobi (Lie) or left-symmetry (LeftSymmetric) residuals
/// on all basis pairs/triples.
Report check_axioms(const ConformalAlgebra& algebra);

/// Lie algebra g(A) with [a_x b] = a_x b - b_{-x-d} a.
ConformalAlgebra sub_adjacent(const ConformalAlgebra& algebra);

/// Label helpers for residual reporting.
std::string basis_label(const std::vector<std::string>& names, std::initializer_list<std::size_t> idx);

}  // namespace confyb
