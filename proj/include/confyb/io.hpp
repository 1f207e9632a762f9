#pragma once

// JSON presentations of every object, and the input bundle read by the CLI.

#include "confyb/catalog.hpp"
#include "confyb/coeff.hpp"
#include "confyb/gdquad.hpp"
#include "confyb/operators.hpp"
#include "confyb/tensor.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace confyb {

using json = nlohmann::json;

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Poly poly_from_json(const json& j, const VarTable& vars);

AlgebraKind kind_from_string(const std::string& s);

/// {"kind":"lie","basis":["L"],"params":[],"products":{"L,L":{"L":"d+2*x"}}}
ConformalAlgebra algebra_from_json(const json& j);
json algebra_to_json(const ConformalAlgebra& A);

/// Algebra fields plus "module_basis" and "action" (or "action_l"/"action_r").
Representation representation_from_json(const json& j);
json representation_to_json(const Representation& rep);

/// {"entries":[{"i":"L","j":"W*","c":"d1+2*d2"}]}
Tensor2 tensor_from_json(const json& j, const std::vector<std::string>& names, const VarTable& vars);
json tensor_to_json(const Tensor2& t, const std::vector<std::string>& names);
json tensor3_to_json(const Tensor3& t, const std::vector<std::string>& names);

/// {"L":{"W":"g0+g1*d"},"W":{}}: row per source basis element.
ModuleMap module_map_from_json(const json& j, const std::vector<std::string>& source,
                               const std::vector<std::string>& target, const VarTable& vars);
json module_map_to_json(const ModuleMap& m, const std::vector<std::string>& source,
                        const std::vector<std::string>& target);
ConformalLinearMap linear_map_from_json(const json& j, const std::vector<std::string>& source,
                                        const std::vector<std::string>& target, const VarTable& vars);
json linear_map_to_json(const ConformalLinearMap& m, const std::vector<std::string>& source,
                        const std::vector<std::string>& target);

/// Same nested layout, polynomials in x.
CocycleForm form_from_json(const json& j, const std::vector<std::string>& names, AlgebraKind kind,
                           const VarTable& vars);
json form_to_json(const CocycleForm& f, const std::vector<std::string>& names);

/// {"dim":2,"basis":["L","W"],"circ":{"W,L":{"W":"1"}},"lie":{}}
GDBialgebra gd_from_json(const json& j);
json gd_to_json(const GDBialgebra& V);

/// {"L":"d","W":"1"}
Element element_from_json(const json& j, const std::vector<std::string>& names, const VarTable& vars);
json element_to_json(const Element& e, const std::vector<std::string>& names);

/// {"unknowns":["c"],"equations":["c^2"]}
PolySystem system_from_json(const json& j);
json system_to_json(const PolySystem& s);
json solve_result_to_json(const SolveResult& r);

/// {"ok":..., "checks":[{"name":..., "residuals":[{"basis":..., "poly":...}]}]}
json report_to_json(const Report& r);

json catalog_to_json(const CatalogEntry& e);

/// Everything a subcommand may need, read from one JSON document. A string
/// "algebra" (or "catalog") names a catalog entry whose fields are used as
/// defaults. "representation" may also be a string naming a standard
/// representation of the algebra, optionally prefixed "dual:".
struct Bundle {
  json raw;
  VarTable vars;
  std::optional<ConformalAlgebra> algebra;
  std::optional<Representation> representation;
  std::optional<GDBialgebra> gd;
  std::optional<CatalogEntry> entry;

  static Bundle parse(const json& j);

  const ConformalAlgebra& need_algebra() const;
  const Representation& need_representation() const;
  const GDBialgebra& need_gd() const;
  Tensor2 tensor() const;
  ModuleMap map() const;
  ModuleMap map(const std::vector<std::string>& source, const std::vector<std::string>& target) const;
  ConformalLinearMap linear_map(const std::vector<std::string>& source, const std::vector<std::string>& target) const;
  CocycleForm form() const;
  Element element() const;
  PolySystem system() const;
  bool has(const std::string& key) const;

  /// Replace parameters by values in every loaded object.
  void substitute(const std::map<std::string, Poly>& values);

private:
  std::map<std::string, Poly> m_subst;
};

}  // namespace confyb
