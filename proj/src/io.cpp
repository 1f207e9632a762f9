#include "confyb/io.hpp"

#include <algorithm>

namespace confyb {

namespace {

std::size_t find_name(const std::vector<std::string>& names, const std::string& n, const char* what) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) throw InputError(std::string("unknown ") + what + " '" + n + "'");
  return static_cast<std::size_t>(it - names.begin());
}

std::pair<std::string, std::string> split_pair(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw InputError("expected 'a,b' key, got '" + key + "'");
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(' '));
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  return {trim(key.substr(0, comma)), trim(key.substr(comma + 1))};
}

std::vector<std::string> string_list(const json& j, const char* field) {
  if (!j.contains(field)) return {};
  if (!j.at(field).is_array()) throw InputError(std::string("'") + field + "' must be an array of names");
  return j.at(field).get<std::vector<std::string>>();
}

VarTable vars_of(const json& j) { return VarTable(string_list(j, "params")); }

/// {"a,b": {"c": poly}} into a product table.
ProductTable table_from_json(const json& j, const std::vector<std::string>& left,
                             const std::vector<std::string>& right, const std::vector<std::string>& out,
                             const VarTable& vars) {
  ProductTable t(left.size(), right.size(), out.size());
  if (j.is_null()) return t;
  if (!j.is_object()) throw InputError("product table must be an object");
  for (const auto& [key, row] : j.items()) {
    const auto [a, b] = split_pair(key);
    const std::size_t i = find_name(left, a, "basis element"), k = find_name(right, b, "basis element");
    for (const auto& [c, p] : row.items()) t.set(i, k, find_name(out, c, "basis element"), poly_from_json(p, vars));
  }
  return t;
}

json table_to_json(const ProductTable& t, const std::vector<std::string>& left,
                   const std::vector<std::string>& right, const std::vector<std::string>& out) {
  json j = json::object();
  for (std::size_t i = 0; i < t.left_rank(); ++i)
    for (std::size_t k = 0; k < t.right_rank(); ++k) {
      const Element e = t.entry(i, k);
      if (e.is_zero()) continue;
      json row = json::object();
      for (std::size_t c = 0; c < e.rank(); ++c)
        if (!e[c].is_zero()) row[out[c]] = e[c].to_string();
      j[left[i] + "," + right[k]] = row;
    }
  return j;
}

json params_json(const VarTable& v) { return json(v.params()); }

}  // namespace

Poly poly_from_json(const json& j, const VarTable& vars) {
  try {
    if (j.is_string()) return parse_poly(j.get<std::string>(), vars);
    if (j.is_number_integer()) return Poly(j.get<long>());
  } catch (const PolyError& e) {
    throw InputError(e.what());
  }
  throw InputError("polynomial must be a string or an integer, got " + j.dump());
}

AlgebraKind kind_from_string(const std::string& s) {
  if (s == "lie") return AlgebraKind::Lie;
  if (s == "left_symmetric") return AlgebraKind::LeftSymmetric;
  throw InputError("kind must be 'lie' or 'left_symmetric', got '" + s + "'");
}

ConformalAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw InputError("algebra must be an object");
  const auto basis = string_list(j, "basis");
  if (basis.empty()) throw InputError("algebra needs a nonempty 'basis'");
  ConformalAlgebra A(kind_from_string(j.value("kind", "lie")), basis, vars_of(j));
  const ProductTable t = table_from_json(j.value("products", json()), basis, basis, basis, A.vars());
  for (std::size_t i = 0; i < A.rank(); ++i)
    for (std::size_t k = 0; k < A.rank(); ++k) A.set_product(i, k, t.entry(i, k));
  return A;
}

json algebra_to_json(const ConformalAlgebra& A) {
  json j;
  j["kind"] = to_string(A.kind());
  j["basis"] = A.basis();
  j["params"] = params_json(A.vars());
  j["products"] = table_to_json(A.table(), A.basis(), A.basis(), A.basis());
  return j;
}

Representation representation_from_json(const json& j) {
  const ConformalAlgebra A = algebra_from_json(j);
  const auto mbasis = string_list(j, "module_basis");
  if (mbasis.empty()) throw InputError("representation needs a nonempty 'module_basis'");
  Representation rep(A, mbasis);
  if (A.kind() == AlgebraKind::Lie) {
    rep.set_action(table_from_json(j.value("action", json()), A.basis(), mbasis, mbasis, A.vars()));
  } else {
    rep.set_action(table_from_json(j.value("action_l", json()), A.basis(), mbasis, mbasis, A.vars()));
    rep.set_right_action(table_from_json(j.value("action_r", json()), A.basis(), mbasis, mbasis, A.vars()));
  }
  return rep;
}

json representation_to_json(const Representation& rep) {
  json j = algebra_to_json(rep.algebra());
  const auto& A = rep.algebra();
  j["module_basis"] = rep.module_basis();
  if (rep.kind() == AlgebraKind::Lie) {
    j["action"] = table_to_json(rep.action(), A.basis(), rep.module_basis(), rep.module_basis());
  } else {
    j["action_l"] = table_to_json(rep.action(), A.basis(), rep.module_basis(), rep.module_basis());
    j["action_r"] = table_to_json(rep.right_action(), A.basis(), rep.module_basis(), rep.module_basis());
  }
  return j;
}

Tensor2 tensor_from_json(const json& j, const std::vector<std::string>& names, const VarTable& vars) {
  Tensor2 t(names.size());
  if (!j.contains("entries")) throw InputError("tensor needs 'entries'");
  for (const auto& e : j.at("entries")) {
    const std::size_t a = find_name(names, e.at("i").get<std::string>(), "basis element");
    const std::size_t b = find_name(names, e.at("j").get<std::string>(), "basis element");
    t.add(a, b, poly_from_json(e.at("c"), vars));
  }
  return t;
}

json tensor_to_json(const Tensor2& t, const std::vector<std::string>& names) {
  json entries = json::array();
  for (const auto& [k, p] : t.entries())
    entries.push_back({{"i", names.at(k.first)}, {"j", names.at(k.second)}, {"c", p.to_string()}});
  return {{"entries", entries}};
}

json tensor3_to_json(const Tensor3& t, const std::vector<std::string>& names) {
  json entries = json::array();
  for (const auto& [k, p] : t.entries())
    entries.push_back(
        {{"i", names.at(k[0])}, {"j", names.at(k[1])}, {"k", names.at(k[2])}, {"c", p.to_string()}});
  return {{"entries", entries}, {"reduced", t.reduced()}};
}

ModuleMap module_map_from_json(const json& j, const std::vector<std::string>& source,
                               const std::vector<std::string>& target, const VarTable& vars) {
  if (!j.is_object()) throw InputError("map must be an object keyed by source basis");
  ModuleMap m(source.size(), target.size());
  for (const auto& [s, row] : j.items()) {
    const std::size_t i = find_name(source, s, "source basis element");
    for (const auto& [t, p] : row.items()) m.set(i, find_name(target, t, "target basis element"), poly_from_json(p, vars));
  }
  return m;
}

json module_map_to_json(const ModuleMap& m, const std::vector<std::string>& source,
                        const std::vector<std::string>& target) {
  json j = json::object();
  for (std::size_t i = 0; i < m.source_rank(); ++i) {
    json row = json::object();
    for (std::size_t k = 0; k < m.target_rank(); ++k)
      if (!m.at(i, k).is_zero()) row[target[k]] = m.at(i, k).to_string();
    j[source[i]] = row;
  }
  return j;
}

ConformalLinearMap linear_map_from_json(const json& j, const std::vector<std::string>& source,
                                        const std::vector<std::string>& target, const VarTable& vars) {
  if (!j.is_object()) throw InputError("map must be an object keyed by source basis");
  ConformalLinearMap m(source.size(), target.size());
  for (const auto& [s, row] : j.items()) {
    const std::size_t i = find_name(source, s, "source basis element");
    for (const auto& [t, p] : row.items()) m.set(i, find_name(target, t, "target basis element"), poly_from_json(p, vars));
  }
  return m;
}

json linear_map_to_json(const ConformalLinearMap& m, const std::vector<std::string>& source,
                        const std::vector<std::string>& target) {
  json j = json::object();
  for (std::size_t i = 0; i < m.source_rank(); ++i) {
    json row = json::object();
    for (std::size_t k = 0; k < m.target_rank(); ++k)
      if (!m.at(i, k).is_zero()) row[target[k]] = m.at(i, k).to_string();
    j[source[i]] = row;
  }
  return j;
}

CocycleForm form_from_json(const json& j, const std::vector<std::string>& names, AlgebraKind kind,
                           const VarTable& vars) {
  if (!j.is_object()) throw InputError("form must be an object keyed by basis");
  CocycleForm f(kind, names.size());
  for (const auto& [a, row] : j.items()) {
    const std::size_t i = find_name(names, a, "basis element");
    for (const auto& [b, p] : row.items()) f.set(i, find_name(names, b, "basis element"), poly_from_json(p, vars));
  }
  return f;
}

json form_to_json(const CocycleForm& f, const std::vector<std::string>& names) {
  json j = json::object();
  for (std::size_t i = 0; i < f.rank; ++i) {
    json row = json::object();
    for (std::size_t k = 0; k < f.rank; ++k)
      if (!f.at(i, k).is_zero()) row[names[k]] = f.at(i, k).to_string();
    j[names[i]] = row;
  }
  return j;
}

GDBialgebra gd_from_json(const json& j) {
  if (!j.is_object()) throw InputError("GD bialgebra must be an object");
  const auto basis = string_list(j, "basis");
  if (basis.empty()) throw InputError("GD bialgebra needs a nonempty 'basis'");
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != basis.size())
    throw InputError("'dim' does not match the basis length");
  GDBialgebra V(basis, vars_of(j));
  V.circ = table_from_json(j.value("circ", json()), basis, basis, basis, V.vars);
  V.lie = table_from_json(j.value("lie", json()), basis, basis, basis, V.vars);
  for (const ProductTable* t : {&V.circ, &V.lie})
    for (std::size_t a = 0; a < V.dim(); ++a)
      for (std::size_t b = 0; b < V.dim(); ++b)
        for (const auto& p : t->entry(a, b).coeffs)
          for (const auto& v : p.variables())
            if (is_reserved_var(v)) throw InputError("GD structure constants must be free of " + v);
  return V;
}

json gd_to_json(const GDBialgebra& V) {
  json j;
  j["dim"] = V.dim();
  j["basis"] = V.basis;
  j["params"] = params_json(V.vars);
  j["circ"] = table_to_json(V.circ, V.basis, V.basis, V.basis);
  j["lie"] = table_to_json(V.lie, V.basis, V.basis, V.basis);
  return j;
}

Element element_from_json(const json& j, const std::vector<std::string>& names, const VarTable& vars) {
  if (!j.is_object()) throw InputError("element must be an object keyed by basis");
  Element e(names.size());
  for (const auto& [n, p] : j.items()) e[find_name(names, n, "basis element")] += poly_from_json(p, vars);
  return e;
}

json element_to_json(const Element& e, const std::vector<std::string>& names) {
  json j = json::object();
  for (std::size_t i = 0; i < e.rank(); ++i)
    if (!e[i].is_zero()) j[names[i]] = e[i].to_string();
  return j;
}

PolySystem system_from_json(const json& j) {
  PolySystem s;
  s.unknowns = string_list(j, "unknowns");
  std::vector<std::string> params = s.unknowns;
  for (const auto& p : string_list(j, "params"))
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  const VarTable vars(params);
  for (const auto& e : j.value("equations", json::array())) s.equations.push_back(poly_from_json(e, vars));
  return s;
}

json system_to_json(const PolySystem& s) {
  json eqs = json::array();
  for (const auto& e : s.equations) eqs.push_back(e.to_string());
  return {{"unknowns", s.unknowns}, {"equations", eqs}};
}

json solve_result_to_json(const SolveResult& r) {
  json a = json::object();
  for (const auto& [k, v] : r.assignment) a[k] = v.to_string();
  json rem = json::array();
  for (const auto& e : r.remaining) rem.push_back(e.to_string());
  return {{"status", r.solved ? "solved" : "partial"}, {"assignment", a}, {"remaining", rem}};
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json res = json::array();
    for (const auto& x : c.residuals) res.push_back({{"basis", x.basis}, {"poly", x.poly.to_string()}});
    json cj = {{"name", c.name}, {"ok", c.ok()}, {"residuals", res}};
    if (!c.notes.empty()) cj["notes"] = c.notes;
    checks.push_back(cj);
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

json catalog_to_json(const CatalogEntry& e) {
  json j;
  j["name"] = e.name;
  j["description"] = e.description;
  if (e.algebra) j["algebra"] = algebra_to_json(*e.algebra);
  if (e.map) j["map"] = module_map_to_json(*e.map, e.algebra->basis(), e.algebra->basis());
  if (e.tensor) j["tensor"] = tensor_to_json(*e.tensor, e.algebra->basis());
  if (e.gd) j["gd"] = gd_to_json(*e.gd);
  return j;
}

// ---------------------------------------------------------------------------
// Bundle
// ---------------------------------------------------------------------------

namespace {

Representation standard_by_name(const ConformalAlgebra& A, const std::string& spec) {
  std::string name = spec;
  bool dual = false;
  if (name.rfind("dual:", 0) == 0) {
    dual = true;
    name = name.substr(5);
  }
  Representation rep;
  if (name == "adjoint")
    rep = standard_rep(A, StandardRep::Adjoint);
  else if (name == "regular_left")
    rep = standard_rep(A, StandardRep::RegularLeft);
  else if (name == "regular_right")
    rep = standard_rep(A, StandardRep::RegularRight);
  else if (name == "left_minus_right")
    rep = standard_rep(A, StandardRep::LeftMinusRight);
  else
    throw InputError("unknown standard representation '" + name +
                     "' (adjoint, regular_left, regular_right, left_minus_right, optionally 'dual:')");
  return dual ? dual_rep(rep) : rep;
}

}  // namespace

Bundle Bundle::parse(const json& j) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  Bundle b;
  b.raw = j;
  std::string cat;
  if (j.contains("catalog")) cat = j.at("catalog").get<std::string>();
  if (j.contains("algebra") && j.at("algebra").is_string()) cat = j.at("algebra").get<std::string>();
  if (!cat.empty()) {
    try {
      b.entry = catalog(cat);
    } catch (const AlgebraError& e) {
      throw InputError(e.what());
    }
    b.algebra = b.entry->algebra;
    b.gd = b.entry->gd;
  }
  if (j.contains("algebra") && j.at("algebra").is_object()) b.algebra = algebra_from_json(j.at("algebra"));
  if (j.contains("gd")) {
    if (j.at("gd").is_string()) {
      try {
        b.gd = catalog(j.at("gd").get<std::string>()).gd;
      } catch (const AlgebraError& e) {
        throw InputError(e.what());
      }
      if (!b.gd) throw InputError("catalog entry '" + j.at("gd").get<std::string>() + "' is not a GD bialgebra");
    } else {
      b.gd = gd_from_json(j.at("gd"));
    }
  }
  if (j.contains("representation")) {
    const json& r = j.at("representation");
    if (r.is_string()) {
      if (!b.algebra) throw InputError("a named representation needs an algebra");
      b.representation = standard_by_name(*b.algebra, r.get<std::string>());
    } else {
      b.representation = representation_from_json(r);
      if (!b.algebra) b.algebra = b.representation->algebra();
    }
  }
  b.vars = VarTable(string_list(j, "params"));
  if (b.algebra) b.vars = b.vars.merged(b.algebra->vars());
  if (b.gd) b.vars = b.vars.merged(b.gd->vars);
  if (b.representation) b.vars = b.vars.merged(b.representation->algebra().vars());
  return b;
}

bool Bundle::has(const std::string& key) const {
  if (raw.contains(key)) return true;
  if (!entry) return false;
  if (key == "map") return entry->map.has_value();
  if (key == "tensor") return entry->tensor.has_value();
  return false;
}

const ConformalAlgebra& Bundle::need_algebra() const {
  if (!algebra) throw InputError("input needs an 'algebra'");
  return *algebra;
}

const Representation& Bundle::need_representation() const {
  if (!representation) throw InputError("input needs a 'representation'");
  return *representation;
}

const GDBialgebra& Bundle::need_gd() const {
  if (!gd) throw InputError("input needs a 'gd' bialgebra");
  return *gd;
}

Tensor2 Bundle::tensor() const {
  const auto& A = need_algebra();
  if (raw.contains("tensor")) return tensor_from_json(raw.at("tensor"), A.basis(), vars).subst(m_subst);
  if (entry && entry->tensor) return entry->tensor->subst(m_subst);
  throw InputError("input needs a 'tensor'");
}

ModuleMap Bundle::map() const { return map(need_algebra().basis(), need_algebra().basis()); }

ModuleMap Bundle::map(const std::vector<std::string>& source, const std::vector<std::string>& target) const {
  if (raw.contains("map")) return module_map_from_json(raw.at("map"), source, target, vars).subst(m_subst);
  if (entry && entry->map) return entry->map->subst(m_subst);
  throw InputError("input needs a 'map'");
}

ConformalLinearMap Bundle::linear_map(const std::vector<std::string>& source,
                                      const std::vector<std::string>& target) const {
  if (!raw.contains("map")) throw InputError("input needs a 'map'");
  ConformalLinearMap m = linear_map_from_json(raw.at("map"), source, target, vars);
  for (std::size_t i = 0; i < m.source_rank(); ++i)
    for (std::size_t k = 0; k < m.target_rank(); ++k) m.set(i, k, m.at(i, k).subst(m_subst));
  return m;
}

CocycleForm Bundle::form() const {
  const auto& A = need_algebra();
  if (!raw.contains("form")) throw InputError("input needs a 'form'");
  CocycleForm f = form_from_json(raw.at("form"), A.basis(), A.kind(), vars);
  for (auto& p : f.entries) p = p.subst(m_subst);
  return f;
}

Element Bundle::element() const {
  const auto& A = need_algebra();
  if (!raw.contains("element")) throw InputError("input needs an 'element'");
  return element_from_json(raw.at("element"), A.basis(), vars).subst(m_subst);
}

PolySystem Bundle::system() const {
  if (!raw.contains("system")) throw InputError("input needs a 'system'");
  PolySystem s = system_from_json(raw.at("system"));
  for (auto& e : s.equations) e = e.subst(m_subst);
  return s;
}

void Bundle::substitute(const std::map<std::string, Poly>& values) {
  for (const auto& [k, v] : values)
    if (!vars.is_param(k)) throw InputError("'" + k + "' is not a declared parameter");
  for (const auto& [k, v] : values) m_subst[k] = v;
  if (algebra) algebra = algebra->subst(values);
  if (representation) representation = representation->subst(values);
  if (gd) {
    gd->circ = gd->circ.subst(values);
    gd->lie = gd->lie.subst(values);
  }
}

}  // namespace confyb
