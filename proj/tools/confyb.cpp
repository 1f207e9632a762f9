// confyb: batch front end over JSON inputs.
//
// Exit codes: 0 all checks ok, 1 a check failed (or an inconclusive
// result), 2 input or precondition error.

#include "confyb/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace confyb;

namespace {

struct Options {
  std::string in;
  std::string out;
  std::vector<std::string> params;
  std::vector<std::string> shifts;
  std::string weight = "0";
  std::string mode = "skew";
  std::string bracket;
  long window = 6;
  unsigned degree = 3;
  bool kernel = false;
  std::string name;
};

struct Outcome {
  json doc;
  int code = 0;
};

json read_input(const std::string& path) {
  if (path.empty()) throw InputError("--in <file.json> is required");
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::pair<std::string, std::string> split_assignment(const std::string& s, const char* flag) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw InputError(std::string(flag) + " expects name=value, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

Bundle load(const Options& o) {
  Bundle b = Bundle::parse(read_input(o.in));
  std::map<std::string, Poly> values;
  for (const auto& p : o.params) {
    auto [name, value] = split_assignment(p, "--param");
    if (!b.vars.is_param(name)) throw InputError("'" + name + "' is not a declared parameter");
    if (value == "free") continue;
    try {
      values[name] = parse_poly(value, VarTable());
    } catch (const PolyError& e) {
      throw InputError("--param " + name + ": " + e.what());
    }
  }
  if (!values.empty()) b.substitute(values);
  return b;
}

Poly weight_of(const Options& o, const VarTable& vars) {
  if (o.weight == "free") return Poly::var("alpha");
  try {
    return parse_poly(o.weight, vars);
  } catch (const PolyError& e) {
    throw InputError(std::string("--weight: ") + e.what());
  }
}

Outcome report_outcome(const Report& r, json extra = json::object()) {
  json doc = report_to_json(r);
  for (auto& [k, v] : extra.items()) doc[k] = v;
  return {doc, r.ok() ? 0 : 1};
}

Report tensor3_report(const std::string& name, const Tensor3& t, const std::vector<std::string>& names) {
  Report r;
  Check& c = r.add_check(name);
  for (const auto& [k, p] : t.entries()) c.add(basis_label(names, {k[0], k[1], k[2]}), p);
  return r;
}

std::vector<std::string> starred(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) out.push_back(n + "*");
  return out;
}

/// "L_2" -> window symbol in displayed indices.
WindowElement parse_symbol(const ConformalAlgebra& A, const std::string& s) {
  auto us = s.rfind('_');
  if (us == std::string::npos || us == 0) throw InputError("window symbol must look like L_3, got '" + s + "'");
  long idx;
  try {
    idx = std::stol(s.substr(us + 1));
  } catch (const std::exception&) {
    throw InputError("bad index in window symbol '" + s + "'");
  }
  return WindowElement::symbol(A.index_of(s.substr(0, us)), idx);
}

// ---------------------------------------------------------------------------

Outcome run(const std::string& cmd, const Options& o) {
  if (cmd == "catalog") {
    if (o.name.empty()) {
      json list = json::array();
      for (const auto& n : catalog_names()) list.push_back({{"name", n}, {"description", catalog(n).description}});
      return {list, 0};
    }
    try {
      return {catalog_to_json(catalog(o.name)), 0};
    } catch (const AlgebraError& e) {
      throw InputError(e.what());
    }
  }

  if (cmd == "solve") {
    Bundle b = load(o);
    PolySystem sys = b.has("system") ? b.system() : rb_constraints(b.need_algebra(), o.degree, weight_of(o, b.vars));
    try {
      SolveResult r = solve_squares(sys);
      return {solve_result_to_json(r), r.solved ? 0 : 1};
    } catch (const Inconsistent& e) {
      return {{{"status", "inconsistent"}, {"reason", e.what()}}, 1};
    }
  }

  Bundle b = load(o);

  if (cmd == "check-axioms") return report_outcome(check_axioms(b.need_algebra()));
  if (cmd == "check-rep") return report_outcome(check_rep(b.need_representation()));

  if (cmd == "check-cybe" || cmd == "check-s") {
    const auto& A = b.need_algebra();
    const bool lie = cmd == "check-cybe";
    if (lie != (A.kind() == AlgebraKind::Lie))
      throw InputError(lie ? "check-cybe needs a Lie conformal algebra" : "check-s needs a left-symmetric algebra");
    const Tensor2 r = b.tensor();
    const Tensor3 res = lie ? cybe_residual(A, r) : s_residual(A, r);
    const TensorParts p = parts(r);
    return report_outcome(tensor3_report(lie ? "cybe" : "s_equation", res, A.basis()),
                          {{"skew", p.is_skew}, {"symmetric", p.is_sym}});
  }

  if (cmd == "check-o-operator") {
    const auto& rep = b.need_representation();
    const ModuleMap T = b.map(rep.module_basis(), rep.algebra().basis());
    return report_outcome(check_o_operator(T, rep, o.kernel));
  }

  if (cmd == "check-rb") {
    const auto& A = b.need_algebra();
    const ModuleMap T = b.map();
    const Poly w = weight_of(o, b.vars);
    Report r = check_rota_baxter(A, T, w);
    json extra = json::object();
    if (r.ok() && w.is_zero() && A.kind() == AlgebraKind::Lie)
      extra["induced"] = algebra_to_json(induced_lsc(T, standard_rep(A, StandardRep::Adjoint), InducedMode::RotaBaxter));
    return report_outcome(r, extra);
  }

  if (cmd == "build-semidirect") {
    const auto& rep = b.need_representation();
    return {algebra_to_json(semidirect(rep.algebra(), rep)), 0};
  }
  if (cmd == "build-dual") return {representation_to_json(dual_rep(b.need_representation())), 0};

  if (cmd == "r-from-t") {
    const auto& rep = b.need_representation();
    RMode mode;
    if (o.mode == "raw")
      mode = RMode::Raw;
    else if (o.mode == "skew")
      mode = RMode::Skew;
    else if (o.mode == "sym")
      mode = RMode::Sym;
    else
      throw InputError("--mode must be raw, skew or sym");
    const ConformalLinearMap t = b.linear_map(rep.module_basis(), rep.algebra().basis());
    const Representation dual = dual_rep(rep);
    const ConformalAlgebra ext = semidirect(rep.algebra(), dual);
    return {{{"algebra", algebra_to_json(ext)}, {"tensor", tensor_to_json(r_from_t(t, rep, mode), ext.basis())}}, 0};
  }

  if (cmd == "t-from-r") {
    const auto& A = b.need_algebra();
    const ConformalLinearMap t = t_from_r(b.tensor());
    return {{{"map", linear_map_to_json(t, starred(A.basis()), A.basis())},
             {"T0", module_map_to_json(t.T0(), starred(A.basis()), A.basis())}},
            0};
  }

  if (cmd == "cobracket") {
    const auto& A = b.need_algebra();
    return {{{"tensor", tensor_to_json(cobracket_from_r(A, b.tensor(), b.element()), A.basis())}}, 0};
  }

  if (cmd == "cocycle-from-r") {
    const auto& A = b.need_algebra();
    const CocycleForm f = cocycle_from_r(A, b.tensor());
    return report_outcome(cocycle_check(A, f), {{"form", form_to_json(f, A.basis())}});
  }
  if (cmd == "check-cocycle") return report_outcome(cocycle_check(b.need_algebra(), b.form()));

  if (cmd == "form-suite") {
    const auto& A = b.need_algebra();
    std::optional<Tensor2> r;
    if (b.has("tensor")) r = b.tensor();
    const BilinearForm B = b.form();
    Report rep = invariant_form_suite(A, B, r);
    json extra = json::object();
    if (r && rep.ok()) extra["p0"] = module_map_to_json(p_zero_from_r(B, *r), A.basis(), A.basis());
    return report_outcome(rep, extra);
  }

  if (cmd == "rb-constraints") {
    const PolySystem sys = rb_constraints(b.need_algebra(), o.degree, weight_of(o, b.vars));
    return {{{"system", system_to_json(sys)}}, 0};
  }

  if (cmd == "gd-convert") {
    if (b.gd && !b.raw.contains("algebra")) return {{{"algebra", algebra_to_json(quadratic_from_gd(*b.gd))}}, 0};
    return {{{"gd", gd_to_json(gd_from_quadratic(b.need_algebra()))}}, 0};
  }

  if (cmd == "gd-check") {
    const auto& V = b.need_gd();
    Report r = check_gd(V);
    if (b.raw.contains("map")) r.append(rb_gd_check(V, b.map(V.basis, V.basis), weight_of(o, b.vars)));
    return report_outcome(r);
  }

  if (cmd == "zero-divisors") {
    const auto& V = b.need_gd();
    const ZeroDivisorResult z = zero_divisor_probe(V);
    json doc = {{"result", to_string(z.kind)}};
    if (z.kind == ZeroDivisorResult::Kind::Witness) {
      doc["a"] = element_to_json(z.a, V.basis);
      doc["b"] = element_to_json(z.b, V.basis);
    }
    return {doc, z.kind == ZeroDivisorResult::Kind::NoZeroDivisors ? 0 : 1};
  }

  if (cmd == "coeff") {
    const auto& A = b.need_algebra();
    std::map<std::string, long> shifts;
    for (const auto& s : o.shifts) {
      auto [name, value] = split_assignment(s, "--shift");
      try {
        shifts[name] = std::stol(value);
      } catch (const std::exception&) {
        throw InputError("--shift " + name + ": not an integer");
      }
    }
    const CoeffWindow w(A, o.window, shifts);
    if (!o.bracket.empty()) {
      auto comma = o.bracket.find(',');
      if (comma == std::string::npos) throw InputError("--bracket expects a,b such as L_2,W_3");
      auto res = coeff_bracket(w, parse_symbol(A, o.bracket.substr(0, comma)), parse_symbol(A, o.bracket.substr(comma + 1)));
      return {{{"bracket", res ? w.render(*res) : "out_of_window"}}, 0};
    }
    std::optional<ModuleMap> T;
    if (b.has("map")) T = b.map();
    return report_outcome(window_checks(w, T, weight_of(o, b.vars)));
  }

  throw InputError("unknown subcommand '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for Lie and left-symmetric conformal algebras"};
  app.require_subcommand(1);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
  };
  const std::vector<Spec> specs{
      {"check-axioms", "skew-symmetry and Jacobi, or left-symmetry"},
      {"check-rep", "module axioms of a representation"},
      {"check-cybe", "conformal classical Yang-Baxter equation"},
      {"check-s", "conformal S-equation"},
      {"check-o-operator", "O-operator identity for a map from a module"},
      {"check-rb", "Rota-Baxter identity of a given weight"},
      {"build-semidirect", "semidirect sum of an algebra and a module"},
      {"build-dual", "dual representation on the conformal dual"},
      {"r-from-t", "tensor attached to a conformal linear map"},
      {"t-from-r", "conformal linear map attached to a tensor"},
      {"cobracket", "a_x r for an element a and tensor r"},
      {"cocycle-from-r", "2-cocycle attached to a non-degenerate tensor"},
      {"check-cocycle", "2-cocycle identities for a bilinear form"},
      {"form-suite", "invariant form checks, optionally with P0 from a tensor"},
      {"rb-constraints", "polynomial system for Rota-Baxter operators"},
      {"solve", "solve a system by square cascades and linear elimination"},
      {"gd-convert", "GD bialgebra <-> quadratic Lie conformal algebra"},
      {"gd-check", "GD bialgebra axioms, optionally Rota-Baxter operators"},
      {"zero-divisors", "search the symmetrized Novikov product for zero divisors"},
      {"coeff", "coefficient algebra on a finite window"},
      {"catalog", "list builtins or print one"},
  };

  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (std::string(s.name) == "catalog") {
      sub->add_option("name", o.name, "catalog entry");
    } else {
      sub->add_option("--in", o.in, "input JSON file")->required();
      sub->add_option("--param", o.params, "name=value or name=free");
    }
    sub->add_option("--out", o.out, "write JSON here instead of stdout");
    const std::string n = s.name;
    if (n == "check-rb" || n == "rb-constraints" || n == "solve" || n == "gd-check" || n == "coeff")
      sub->add_option("--weight", o.weight, "Rota-Baxter weight, or 'free'");
    if (n == "rb-constraints" || n == "solve") sub->add_option("--degree", o.degree, "maximal d-degree of T");
    if (n == "check-o-operator") sub->add_flag("--kernel", o.kernel, "allow residuals killed by the action");
    if (n == "r-from-t") sub->add_option("--mode", o.mode, "raw, skew or sym");
    if (n == "coeff") {
      sub->add_option("--window", o.window, "window size N");
      sub->add_option("--shift", o.shifts, "name=s");
      sub->add_option("--bracket", o.bracket, "a,b such as L_2,W_3");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    Outcome out = run(cmd, o);
    const std::string text = out.doc.dump(2) + "\n";
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out);
      if (!f) throw InputError("cannot write '" + o.out + "'");
      f << text;
    }
    return out.code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const NotInvertible& e) {
    std::cerr << "error: not invertible: " << e.what() << "\n";
  } catch (const NotQuadratic& e) {
    std::cerr << "error: not quadratic: " << e.what() << "\n";
  } catch (const PolyError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
  }
  return 2;
}
