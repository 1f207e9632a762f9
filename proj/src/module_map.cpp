#include "confyb/module_map.hpp"

#include <algorithm>
#include <numeric>

namespace confyb {

ModuleMap::ModuleMap(std::size_t source_rank, std::size_t target_rank)
    : m_source(source_rank), m_target(target_rank), m_entries(source_rank * target_rank) {}

ModuleMap ModuleMap::identity(std::size_t rank) {
  ModuleMap m(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) m.set(i, i, Poly(1));
  return m;
}

bool ModuleMap::is_zero() const {
  return std::all_of(m_entries.begin(), m_entries.end(), [](const Poly& p) { return p.is_zero(); });
}

Element ModuleMap::apply(const Element& v) const {
  if (v.rank() != m_source) throw AlgebraError("module map applied to element of wrong rank");
  Element out(m_target);
  for (std::size_t i = 0; i < m_source; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m_target; ++j)
      if (!at(i, j).is_zero()) out[j] += v[i] * at(i, j);
  }
  return out;
}

ModuleMap ModuleMap::then(const ModuleMap& other) const {
  if (m_target != other.m_source) throw AlgebraError("module map composition shape mismatch");
  ModuleMap r(m_source, other.m_target);
  for (std::size_t i = 0; i < m_source; ++i)
    for (std::size_t k = 0; k < other.m_target; ++k) {
      Poly s;
      for (std::size_t j = 0; j < m_target; ++j) s += at(i, j) * other.at(j, k);
      r.set(i, k, s);
    }
  return r;
}

ModuleMap ModuleMap::subst(const std::map<std::string, Poly>& values) const {
  ModuleMap r = *this;
  for (auto& p : r.m_entries) p = p.subst(values);
  return r;
}

namespace {

Poly minor_det(const ModuleMap& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
  if (rows.empty()) return Poly(1);
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  // expand along the first remaining row
  const std::size_t r = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  Poly det;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Poly& entry = m.at(r, cols[c]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != c) sub_cols.push_back(cols[k]);
    Poly term = entry * minor_det(m, sub_rows, sub_cols);
    if (c % 2) det -= term;
    else det += term;
  }
  return det;
}

}  // namespace

Poly determinant(const ModuleMap& square) {
  if (square.source_rank() != square.target_rank()) throw AlgebraError("determinant of a non-square map");
  std::vector<std::size_t> rows(square.source_rank()), cols(square.source_rank());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  return minor_det(square, rows, cols);
}

ModuleMap invert_module_map(const ModuleMap& square) {
  if (square.source_rank() != square.target_rank()) throw NotInvertible("map is not square");
  const Poly det = determinant(square);
  if (det.is_zero()) throw NotInvertible("determinant is zero");
  if (!det.is_constant()) throw NotInvertible("determinant " + det.to_string() + " is not a unit of Q[d]");
  const Rational inv_det = 1 / det.constant_term();
  const std::size_t n = square.source_rank();
  ModuleMap inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // inverse_ij = cofactor_ji / det
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) rows.push_back(k);
        if (k != i) cols.push_back(k);
      }
      Poly cof = minor_det(square, rows, cols);
      if ((i + j) % 2) cof = -cof;
      inv.set(i, j, Poly(inv_det) * cof);
    }
  return inv;
}

}  // namespace confyb
