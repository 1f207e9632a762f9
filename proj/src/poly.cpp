#include "confyb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace confyb {

Rational make_rational(long num, long den) {
  if (den == 0) throw PolyError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial::Monomial(const std::string& var, unsigned exp) {
  if (exp > 0) m_factors.emplace_back(var, exp);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : m_factors) d += e;
  return d;
}

unsigned Monomial::degree_in(const std::string& var) const {
  for (const auto& [v, e] : m_factors)
    if (v == var) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.m_factors.reserve(m_factors.size() + o.m_factors.size());
  auto a = m_factors.begin();
  auto b = o.m_factors.begin();
  while (a != m_factors.end() && b != o.m_factors.end()) {
    if (a->first < b->first) {
      r.m_factors.push_back(*a++);
    } else if (b->first < a->first) {
      r.m_factors.push_back(*b++);
    } else {
      r.m_factors.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.m_factors.insert(r.m_factors.end(), a, m_factors.end());
  r.m_factors.insert(r.m_factors.end(), b, o.m_factors.end());
  return r;
}

Monomial Monomial::without(const std::string& var) const {
  Monomial r;
  for (const auto& f : m_factors)
    if (f.first != var) r.m_factors.push_back(f);
  return r;
}

Monomial Monomial::restricted_to(const std::set<std::string>& vars) const {
  Monomial r;
  for (const auto& f : m_factors)
    if (vars.count(f.first)) r.m_factors.push_back(f);
  return r;
}

Monomial Monomial::without(const std::set<std::string>& vars) const {
  Monomial r;
  for (const auto& f : m_factors)
    if (!vars.count(f.first)) r.m_factors.push_back(f);
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : m_factors) {
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly::Poly(long c) {
  if (c != 0) m_terms.emplace(Monomial{}, Rational(c));
}

Poly::Poly(const Rational& c) {
  if (c != 0) m_terms.emplace(Monomial{}, c);
}

Poly Poly::var(const std::string& name, unsigned exp) {
  return term(Rational(1), Monomial(name, exp));
}

Poly Poly::term(const Rational& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.m_terms.emplace(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m_terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m_terms.erase(it);
  }
}

bool Poly::is_constant() const {
  return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first.is_one());
}

Rational Poly::constant_term() const {
  auto it = m_terms.find(Monomial{});
  return it == m_terms.end() ? Rational(0) : it->second;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : m_terms) d = std::max(d, m.degree());
  return d;
}

unsigned Poly::degree_in(const std::string& var) const {
  unsigned d = 0;
  for (const auto& [m, c] : m_terms) d = std::max(d, m.degree_in(var));
  return d;
}

bool Poly::contains(const std::string& var) const { return degree_in(var) > 0; }

std::set<std::string> Poly::variables() const {
  std::set<std::string> vs;
  for (const auto& [m, c] : m_terms)
    for (const auto& f : m.factors()) vs.insert(f.first);
  return vs;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.m_terms) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.m_terms) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.m_terms) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.m_terms)
    for (const auto& [mb, cb] : b.m_terms) r.add_term(ma * mb, Rational(ca * cb));
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::subst(const std::string& var, const Poly& q) const {
  return subst(std::map<std::string, Poly>{{var, q}});
}

Poly Poly::subst(const std::map<std::string, Poly>& values) const {
  // powers[var][k] = value^k, filled lazily
  std::map<std::string, std::vector<Poly>> powers;
  auto power = [&](const std::string& v, unsigned k) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly(1));
    while (cache.size() <= k) cache.push_back(cache.back() * values.at(v));
    return cache[k];
  };

  Poly r;
  for (const auto& [m, c] : m_terms) {
    Monomial kept;
    Poly factor(c);
    for (const auto& [v, e] : m.factors()) {
      if (values.count(v))
        factor *= power(v, e);
      else
        kept = kept * Monomial(v, e);
    }
    if (!kept.is_one()) factor *= Poly::term(Rational(1), kept);
    r += factor;
  }
  return r;
}

Poly Poly::coefficient(const std::string& var, unsigned k) const {
  Poly r;
  for (const auto& [m, c] : m_terms)
    if (m.degree_in(var) == k) r.add_term(m.without(var), c);
  return r;
}

std::map<Monomial, Poly> Poly::coefficients_in(const std::set<std::string>& vars) const {
  std::map<Monomial, Poly> out;
  for (const auto& [m, c] : m_terms) out[m.restricted_to(vars)].add_term(m.without(vars), c);
  return out;
}

std::string Poly::to_string() const {
  if (m_terms.empty()) return "0";
  // highest total degree first, then map order
  std::vector<const Terms::value_type*> order;
  for (const auto& t : m_terms) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    return a->first.degree() > b->first.degree();
  });
  std::string s;
  for (const auto* t : order) {
    const Rational& c = t->second;
    Rational mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += '-';
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (t->first.is_one()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += t->first.to_string();
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// VarTable
// ---------------------------------------------------------------------------

const std::vector<std::string>& VarTable::slot_partials() {
  static const std::vector<std::string> names{"d", "d1", "d2", "d3"};
  return names;
}

const std::vector<std::string>& VarTable::lambda_vars() {
  static const std::vector<std::string> names{"x", "y", "z1", "z2", "theta"};
  return names;
}

bool is_reserved_var(const std::string& name) {
  const auto& a = VarTable::slot_partials();
  const auto& b = VarTable::lambda_vars();
  return std::find(a.begin(), a.end(), name) != a.end() ||
         std::find(b.begin(), b.end(), name) != b.end();
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

}  // namespace

VarTable::VarTable(std::vector<std::string> params) {
  for (auto& p : params) {
    if (!is_identifier(p)) throw PolyError("invalid parameter name '" + p + "'");
    if (is_reserved_var(p)) throw PolyError("parameter name '" + p + "' is reserved");
    if (std::find(m_params.begin(), m_params.end(), p) != m_params.end())
      throw PolyError("duplicate parameter '" + p + "'");
    m_params.push_back(std::move(p));
  }
}

bool VarTable::is_param(const std::string& name) const {
  return std::find(m_params.begin(), m_params.end(), name) != m_params.end();
}

bool VarTable::contains(const std::string& name) const {
  return is_reserved_var(name) || is_param(name);
}

VarTable VarTable::merged(const VarTable& other) const {
  std::vector<std::string> ps = m_params;
  for (const auto& p : other.m_params)
    if (!is_param(p)) ps.push_back(p);
  return VarTable(std::move(ps));
}

Poly poly_subst(const VarTable& table, const Poly& p, const std::string& var, const Poly& q) {
  if (!table.contains(var)) throw PolyError("unknown variable '" + var + "'");
  return p.subst(var, q);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
  Parser(const std::string& text, const VarTable& table) : m_text(text), m_table(table) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (m_pos != m_text.size()) fail("unexpected '" + std::string(1, m_text[m_pos]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PolyError("polynomial '" + m_text + "': " + what + " at offset " + std::to_string(m_pos));
  }

  void skip() {
    while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
  }

  bool accept(char ch) {
    skip();
    if (m_pos < m_text.size() && m_text[m_pos] == ch) {
      ++m_pos;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = m_pos;
      while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
      if (start == m_pos) fail("expected a non-negative integer exponent");
      return base.pow(static_cast<unsigned>(std::stoul(m_text.substr(start, m_pos - start))));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (m_pos >= m_text.size()) fail("unexpected end of input");
    char ch = m_text[m_pos];
    if (ch == '(') {
      ++m_pos;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return number();
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = m_pos;
      while (m_pos < m_text.size() &&
             (std::isalnum(static_cast<unsigned char>(m_text[m_pos])) || m_text[m_pos] == '_'))
        ++m_pos;
      std::string name = m_text.substr(start, m_pos - start);
      if (!m_table.contains(name)) {
        m_pos = start;
        fail("unknown variable '" + name + "'");
      }
      return Poly::var(name);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  Poly number() {
    std::size_t start = m_pos;
    while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
    std::string num = m_text.substr(start, m_pos - start);
    skip();
    // a '/' directly after an integer always denotes a rational literal
    if (m_pos < m_text.size() && m_text[m_pos] == '/') {
      ++m_pos;
      skip();
      std::size_t dstart = m_pos;
      while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) ++m_pos;
      if (dstart == m_pos) fail("expected denominator");
      Rational q(mpz_class(num), mpz_class(m_text.substr(dstart, m_pos - dstart)));
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      return Poly(q);
    }
    return Poly(Rational(mpz_class(num)));
  }

  const std::string& m_text;
  const VarTable& m_table;
  std::size_t m_pos = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const VarTable& table) { return Parser(text, table).parse(); }

}  // namespace confyb
