#pragma once

#include "confyb/conformal.hpp"

#include <stdexcept>
#include <vector>

namespace confyb {

class NotInvertible : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// C[d]-module map between free modules: T(v_i) = sum_j t_ij(d) e_j.
/// Rows are indexed by the source basis, columns by the target basis.
class ModuleMap {
public:
  ModuleMap() = default;
  ModuleMap(std::size_t source_rank, std::size_t target_rank);
  static ModuleMap identity(std::size_t rank);

  std::size_t source_rank() const { return m_source; }
  std::size_t target_rank() const { return m_target; }
  const Poly& at(std::size_t i, std::size_t j) const { return m_entries.at(i * m_target + j); }
  void set(std::size_t i, std::size_t j, const Poly& p) { m_entries.at(i * m_target + j) = p; }
  bool is_zero() const;

  /// Image of a source element; commutes with d.
  Element apply(const Element& v) const;
  /// (this then other): v -> other(this(v)).
  ModuleMap then(const ModuleMap& other) const;
  ModuleMap subst(const std::map<std::string, Poly>& values) const;

  bool operator==(const ModuleMap&) const = default;

private:
  std::size_t m_source = 0, m_target = 0;
  std::vector<Poly> m_entries;
};

/// Determinant over Q[d] (and parameters).
Poly determinant(const ModuleMap& square);

/// Inverse when the determinant is a nonzero rational constant, the units of
/// Q[d]; throws NotInvertible otherwise.
ModuleMap invert_module_map(const ModuleMap& square);

}  // namespace confyb
