#include "confyb/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace confyb;
using testing::P;

namespace {

namespace fs = std::filesystem;

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("confyb_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_input(const std::string& name, const json& j) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << j.dump(2);
  return p.string();
}

struct Run {
  int code = -1;
  std::string out;
  json doc() const { return json::parse(out); }
};

Run cli(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = std::string(CONFYB_CLI) + " " + args + " > " + out.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  return r;
}

const json VIR = json::parse(R"({"kind":"lie","basis":["L"],"products":{"L,L":{"L":"d+2*x"}}})");

}  // namespace

TEST_CASE("algebra JSON round trip") {
  for (const char* name : {"vir", "hv", "hv_lsc1", "hv_lsc2", "skew_r:hv_lsc2"}) {
    const ConformalAlgebra A = *catalog(name).algebra;
    CHECK_MESSAGE(algebra_from_json(algebra_to_json(A)) == A, name);
  }
  const ConformalAlgebra vir = algebra_from_json(VIR);
  CHECK(vir == virasoro());
  CHECK(vir.product(0, 0, 0) == P("d+2*x"));
}

TEST_CASE("object JSON round trips") {
  const GDBialgebra V = heisenberg_virasoro_gd();
  CHECK(gd_from_json(gd_to_json(V)) == V);

  const CatalogEntry e = catalog("skew_r:hv_lsc1");
  const auto names = e.algebra->basis();
  CHECK(tensor_from_json(tensor_to_json(*e.tensor, names), names, e.algebra->vars()) == *e.tensor);

  const ModuleMap T = hv_rb_family2();
  const std::vector<std::string> lw{"L", "W"};
  CHECK(module_map_from_json(module_map_to_json(T, lw, lw), lw, lw, hv_family2_vars()) == T);

  const CocycleForm f = cocycle_from_r(*e.algebra, *e.tensor);
  CHECK(form_from_json(form_to_json(f, names), names, AlgebraKind::Lie, VarTable()) == f);

  PolySystem s;
  s.unknowns = {"c"};
  s.equations = {P("c^2", {"c"})};
  const PolySystem back = system_from_json(system_to_json(s));
  CHECK(back.unknowns == s.unknowns);
  CHECK(back.equations == s.equations);

  const Element el = element_from_json(json::parse(R"({"L":"d","W":"1"})"), lw, VarTable());
  CHECK(el == P("d") * Element::basis(2, 0) + Element::basis(2, 1));
  CHECK(element_from_json(element_to_json(el, lw), lw, VarTable()) == el);
}

TEST_CASE("report JSON") {
  ConformalAlgebra mutant = virasoro();
  mutant.set_product("L", "L", "L", P("d+3*x"));
  const json j = report_to_json(check_axioms(mutant));
  CHECK_FALSE(j.at("ok").get<bool>());
  bool seen = false;
  for (const auto& c : j.at("checks"))
    if (c.at("name") == "skew_symmetry") {
      seen = true;
      CHECK(c.at("residuals").at(0).at("poly") == "-d");
    }
  CHECK(seen);
}

TEST_CASE("input bundle") {
  Bundle b = Bundle::parse(json::parse(R"({"algebra":"hv_rb_family1"})"));
  REQUIRE(b.algebra);
  CHECK(b.algebra->table() == heisenberg_virasoro().table());
  CHECK(b.map() == hv_rb_family1());
  CHECK(b.vars.is_param("b"));

  b.substitute({{"b", P("2")}});
  CHECK(b.map().at(0, 0) == P("-2"));

  const Bundle r = Bundle::parse(json::parse(R"({"algebra":"vir","representation":"dual:adjoint"})"));
  CHECK(r.need_representation().action().at(0, 0, 0) == P("d-x"));

  CHECK_THROWS_AS(Bundle::parse(json::parse(R"({"algebra":"nosuch"})")), InputError);
  CHECK_THROWS_AS(Bundle::parse(json::parse(R"({"algebra":{"kind":"jordan","basis":["a"]}})")), InputError);
  CHECK_THROWS_AS(Bundle::parse(json::parse(R"({"algebra":{"kind":"lie","basis":["L"],"products":{"L,L":{"L":"d+2*"}}}})")),
                  InputError);
  CHECK_THROWS_AS(Bundle::parse(json::parse(R"({"algebra":"vir"})")).need_gd(), InputError);
}

TEST_CASE("command line: axioms and representations") {
  const std::string vir = write_input("vir.json", {{"algebra", VIR}});
  Run r = cli("check-axioms --in " + vir);
  CHECK(r.code == 0);
  CHECK(r.doc().at("ok").get<bool>());

  json mutant = VIR;
  mutant["products"]["L,L"]["L"] = "d+3*x";
  r = cli("check-axioms --in " + write_input("mutant.json", {{"algebra", mutant}}));
  CHECK(r.code == 1);
  CHECK_FALSE(r.doc().at("ok").get<bool>());

  r = cli("check-rep --in " + write_input("rep.json", {{"algebra", "hv_lsc1"}, {"representation", "dual:regular_left"}}));
  CHECK(r.code == 0);

  r = cli("build-dual --in " + write_input("dual.json", {{"algebra", "vir"}, {"representation", "adjoint"}}));
  CHECK(r.code == 0);
  CHECK(r.out.find("L*") != std::string::npos);
}

TEST_CASE("command line: operators and tensors") {
  const std::string f1 = write_input("f1.json", {{"algebra", "hv_rb_family1"}});
  Run r = cli("check-rb --in " + f1);
  CHECK(r.code == 0);
  CHECK(r.doc().contains("induced"));

  r = cli("check-rb --in " + f1 + " --weight 1");
  CHECK(r.code == 1);
  r = cli("check-rb --in " + f1 + " --param b=0 --weight 1");
  CHECK(r.code == 0);
  r = cli("check-rb --in " + f1 + " --param nosuch=1");
  CHECK(r.code == 2);

  CHECK(cli("check-cybe --in " + write_input("skew.json", {{"catalog", "skew_r:hv_lsc1"}})).code == 0);
  CHECK(cli("check-s --in " + write_input("sym.json", {{"catalog", "sym_r:hv_lsc2"}})).code == 0);
  CHECK(cli("cocycle-from-r --in " + write_input("coc.json", {{"catalog", "skew_r:hv_lsc2"}})).code == 0);

  const json wrong_t = {{"algebra", "vir"},
                        {"tensor", {{"entries", json::array({{{"i", "L"}, {"j", "L"}, {"c", "1"}}})}}}};
  r = cli("check-cybe --in " + write_input("wrong.json", wrong_t));
  CHECK(r.code == 1);
}

TEST_CASE("command line: classification, GD and window") {
  Run r = cli("solve --in " + write_input("solve_vir.json", {{"algebra", "vir"}}));
  CHECK(r.code == 0);
  CHECK(r.doc().at("status") == "solved");

  const json bad = {{"system", {{"unknowns", {"c"}}, {"equations", {"c^2+1"}}}}};
  CHECK(cli("solve --in " + write_input("bad_sys.json", bad)).code == 1);

  r = cli("gd-convert --in " + write_input("gd.json", {{"gd", "vir_gd"}}));
  CHECK(r.code == 0);
  CHECK(algebra_from_json(r.doc().at("algebra")) == virasoro());

  CHECK(cli("zero-divisors --in " + write_input("zd_vir.json", {{"gd", "vir_gd"}})).code == 0);
  r = cli("zero-divisors --in " + write_input("zd_hv.json", {{"gd", "hv_gd"}}));
  CHECK(r.code == 1);

  const std::string hv = write_input("hv.json", {{"algebra", "hv"}});
  r = cli("coeff --in " + hv + " --shift L=1 --shift W=0 --bracket L_2,W_3");
  CHECK(r.code == 0);
  CHECK(r.doc().at("bracket") == "-3*W_5");
  r = cli("coeff --in " + hv + " --window 2 --bracket L_2,L_2");
  CHECK(r.doc().at("bracket") == "out_of_window");
  CHECK(cli("coeff --in " + hv + " --window 4").code == 0);
}

TEST_CASE("command line: errors") {
  CHECK(cli("check-axioms --in " + (scratch() / "missing.json").string()).code == 2);
  const fs::path junk = scratch() / "junk.json";
  std::ofstream(junk) << "{ not json";
  CHECK(cli("check-axioms --in " + junk.string()).code == 2);
  CHECK(cli("catalog nosuch").code == 2);
  CHECK(cli("no-such-command").code == 2);
  const Run list = cli("catalog");
  CHECK(list.code == 0);
  CHECK(list.out.find("hv_rb_family2") != std::string::npos);
  fs::remove_all(scratch());
}
