#pragma once

// Two- and three-fold tensors over a free conformal algebra, the conformal
// classical Yang-Baxter and S-equations, and the dictionary between tensors
// r in R (x) R and conformal linear maps.
//
// A coefficient polynomial of a tensor uses one derivation variable per
// slot: d1, d2 (and d3), so d1^p d2^q e_i (x) e_j stands for
// (d^p e_i) (x) (d^q e_j).

#include "confyb/conformal.hpp"
#include "confyb/module_map.hpp"
#include "confyb/reps.hpp"

#include <array>
#include <map>

namespace confyb {

class Tensor2 {
public:
  using Key = std::pair<std::size_t, std::size_t>;

  Tensor2() = default;
  explicit Tensor2(std::size_t rank) : m_rank(rank) {}

  std::size_t rank() const { return m_rank; }
  const std::map<Key, Poly>& entries() const { return m_entries; }
  Poly at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Poly& p);
  void add(std::size_t i, std::size_t j, const Poly& p);
  bool is_zero() const { return m_entries.empty(); }

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  Tensor2 subst(const std::map<std::string, Poly>& values) const;

  bool operator==(const Tensor2&) const = default;

private:
  std::size_t m_rank = 0;
  std::map<Key, Poly> m_entries;
};

class Tensor3 {
public:
  using Key = std::array<std::size_t, 3>;

  Tensor3() = default;
  explicit Tensor3(std::size_t rank) : m_rank(rank) {}

  std::size_t rank() const { return m_rank; }
  const std::map<Key, Poly>& entries() const { return m_entries; }
  Poly at(std::size_t i, std::size_t j, std::size_t k) const;
  void add(std::size_t i, std::size_t j, std::size_t k, const Poly& p);
  bool is_zero() const { return m_entries.empty(); }
  bool reduced() const { return m_reduced; }
  void mark_reduced() { m_reduced = true; }

  bool operator==(const Tensor3&) const = default;

private:
  std::size_t m_rank = 0;
  std::map<Key, Poly> m_entries;
  bool m_reduced = false;
};

/// Replace d3 by -d1-d2 in every coefficient (quotient by the diagonal
/// derivation).
Tensor3 normal_form3(const Tensor3& t);

struct TensorParts {
  Tensor2 r21;
  Tensor2 skew;  // r - r21
  Tensor2 sym;   // r + r21
  bool is_skew = false;
  bool is_sym = false;
};

/// Flip of the two slots (indices swapped, d1 <-> d2) and the derived parts.
TensorParts parts(const Tensor2& r);

/// [[r, r]] modulo the diagonal derivation, for a Lie conformal algebra.
Tensor3 cybe_residual(const ConformalAlgebra& lie, const Tensor2& r);

/// {{r, r}} modulo the diagonal derivation, for a left-symmetric conformal
/// algebra; the bracket in the last term is the sub-adjacent bracket.
Tensor3 s_residual(const ConformalAlgebra& lsc, const Tensor2& r);

/// T_x(v_i) = sum_j a_ij(x, d) e_j.
class ConformalLinearMap {
public:
  ConformalLinearMap() = default;
  ConformalLinearMap(std::size_t source_rank, std::size_t target_rank);
  static ConformalLinearMap from_module_map(const ModuleMap& m);

  std::size_t source_rank() const { return m_source; }
  std::size_t target_rank() const { return m_target; }
  const Poly& at(std::size_t i, std::size_t j) const { return m_entries.at(i * m_target + j); }
  void set(std::size_t i, std::size_t j, const Poly& p) { m_entries.at(i * m_target + j) = p; }
  bool is_zero() const;

  /// T_sigma(v) for v over the source basis.
  Element apply(const Element& v, const Poly& sigma) const;
  /// Specialization at x = 0.
  ModuleMap T0() const;

  bool operator==(const ConformalLinearMap&) const = default;

private:
  std::size_t m_source = 0, m_target = 0;
  std::vector<Poly> m_entries;
};

/// T^r : A*c -> A with T^r_x(e_i*) = sum_k f_ik(-x-d, d) e_k.
ConformalLinearMap t_from_r(const Tensor2& r);

enum class RMode { Raw, Skew, Sym };

/// r_T = sum a_ij(-d1-d2, d1) e_j (x) v_i* over R |x V*c (algebra basis
/// first, then dual module basis); skew / sym return r_T -+ r_T^21.
Tensor2 r_from_t(const ConformalLinearMap& t, const Representation& rep, RMode mode);

/// a_x r with x := -d1-d2, acting on both slots.
Tensor2 cobracket_from_r(const ConformalAlgebra& algebra, const Tensor2& r, const Element& a);

/// One-line rendering "L,W -> poly; ..." used in diagnostics.
std::string describe(const Tensor3& t, const std::vector<std::string>& names);

}  // namespace confyb
