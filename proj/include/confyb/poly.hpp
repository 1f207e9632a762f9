#pragma once

// Exact sparse multivariate polynomials over the rationals.
//
// Every identity check in the library reduces to "this polynomial is the
// zero polynomial", so the normal form below is canonical: terms are kept in
// a map keyed by monomial, zero coefficients are never stored, and a monomial
// lists its variables sorted by name with positive exponents.

#include <gmpxx.h>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace confyb {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

class Monomial {
public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  explicit Monomial(const std::string& var, unsigned exp = 1);

  const std::vector<Factor>& factors() const { return m_factors; }
  bool is_one() const { return m_factors.empty(); }
  unsigned degree() const;
  unsigned degree_in(const std::string& var) const;

  Monomial operator*(const Monomial& o) const;
  /// Drops `var` from the monomial.
  Monomial without(const std::string& var) const;
  /// Keeps only the listed variables.
  Monomial restricted_to(const std::set<std::string>& vars) const;
  Monomial without(const std::set<std::string>& vars) const;

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

private:
  std::vector<Factor> m_factors;  // sorted by name, exponents > 0
};

class Poly {
public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(long c);  // NOLINT: integer literals read naturally in formulas
  Poly(const Rational& c);  // NOLINT
  static Poly var(const std::string& name, unsigned exp = 1);
  static Poly term(const Rational& c, const Monomial& m);

  const Terms& terms() const { return m_terms; }
  bool is_zero() const { return m_terms.empty(); }
  bool is_constant() const;
  /// Constant term (the coefficient of the empty monomial).
  Rational constant_term() const;
  unsigned degree() const;
  unsigned degree_in(const std::string& var) const;
  bool contains(const std::string& var) const;
  std::set<std::string> variables() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return m_terms == o.m_terms; }

  /// Homomorphic substitution var := q.
  Poly subst(const std::string& var, const Poly& q) const;
  /// Simultaneous substitution of several variables.
  Poly subst(const std::map<std::string, Poly>& values) const;

  /// Coefficient of var^k, as a polynomial in the remaining variables.
  Poly coefficient(const std::string& var, unsigned k) const;
  /// Splits by monomials in `vars`; values are polynomials free of `vars`.
  std::map<Monomial, Poly> coefficients_in(const std::set<std::string>& vars) const;

  /// Renders in the textual grammar accepted by parse_poly.
  std::string to_string() const;

private:
  void add_term(const Monomial& m, const Rational& c);

  Terms m_terms;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

class PolyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Names usable in polynomial text: the fixed derivation and spectral
/// variables plus user-declared free parameters.
class VarTable {
public:
  static const std::vector<std::string>& slot_partials();  // d, d1, d2, d3
  static const std::vector<std::string>& lambda_vars();    // x, y, z1, z2, theta

  VarTable() = default;
  explicit VarTable(std::vector<std::string> params);

  const std::vector<std::string>& params() const { return m_params; }
  bool contains(const std::string& name) const;
  bool is_param(const std::string& name) const;
  /// Union of parameter lists; throws when a parameter collides with a
  /// reserved name.
  VarTable merged(const VarTable& other) const;

  bool operator==(const VarTable&) const = default;

private:
  std::vector<std::string> m_params;
};

bool is_reserved_var(const std::string& name);

/// Parses `p/q`, integers, variables, `+ - * ^` and parentheses.
Poly parse_poly(const std::string& text, const VarTable& table);

/// Table-checked substitution: throws PolyError when `var` is not a name of
/// the table.
Poly poly_subst(const VarTable& table, const Poly& p, const std::string& var, const Poly& q);

}  // namespace confyb
