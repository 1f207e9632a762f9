#include "confyb/catalog.hpp"
#include "confyb/coeff.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace confyb;
using testing::P;

namespace {

WindowElement sym(std::size_t g, long n, const Poly& c = Poly(1)) { return WindowElement::symbol(g, n, c); }

const std::map<std::string, long> HV_SHIFTS{{"L", 1}, {"W", 0}};

}  // namespace

TEST_CASE("n-th products") {
  const NthProductTable vir = nth_products(virasoro());
  const auto& ll = vir.at(0, 0);
  REQUIRE(ll.size() == 2);
  CHECK(ll[0][0] == P("d"));
  CHECK(ll[1][0] == P("2"));

  const NthProductTable hv = nth_products(heisenberg_virasoro());
  REQUIRE(hv.at(0, 1).size() == 2);
  CHECK(hv.at(0, 1)[0][1] == P("d"));
  CHECK(hv.at(0, 1)[1][1] == P("1"));
  CHECK(hv.at(1, 1).empty());

  const NthProductTable ab = nth_products(ConformalAlgebra(AlgebraKind::Lie, {"a", "b"}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(ab.at(i, j).empty());

  for (const auto& A : {virasoro(), heisenberg_virasoro(), hv_lsc1(), hv_lsc2()}) {
    const NthProductTable t = nth_products(A);
    for (std::size_t i = 0; i < A.rank(); ++i)
      for (std::size_t j = 0; j < A.rank(); ++j) CHECK(t.reconstruct(i, j) == A.table().entry(i, j));
  }
}

TEST_CASE("generalized binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(2, 3) == 0);
}

TEST_CASE("raw Virasoro window") {
  const CoeffWindow w(virasoro(), 5);
  // (dL)_3 + 2 (2L)_2 = -3 L_2 + 4 L_2
  auto r = coeff_bracket(w, sym(0, 2), sym(0, 1));
  REQUIRE(r);
  CHECK(*r == sym(0, 2));
  CHECK(w.render(*r) == "L_2");

  const CoeffWindow small(virasoro(), 2);
  CHECK_FALSE(coeff_bracket(small, sym(0, 2), sym(0, 2)));
  CHECK_FALSE(coeff_bracket(small, sym(0, 3), sym(0, 0)));
}

TEST_CASE("HV window relations under the shift") {
  const CoeffWindow w(heisenberg_virasoro(), 6, HV_SHIFTS);
  int compared = 0;
  for (long m = -4; m <= 4; ++m)
    for (long n = -4; n <= 4; ++n) {
      if (!w.in_window(m + n)) continue;
      auto ll = coeff_bracket(w, sym(0, m), sym(0, n));
      auto lw = coeff_bracket(w, sym(0, m), sym(1, n));
      auto ww = coeff_bracket(w, sym(1, m), sym(1, n));
      REQUIRE(ll);
      REQUIRE(lw);
      REQUIRE(ww);
      CHECK(*ll == sym(0, m + n, Poly(m - n)));
      CHECK(*lw == sym(1, m + n, Poly(-n)));
      CHECK(ww->is_zero());
      ++compared;
    }
  CHECK(compared == 75);
  CHECK(w.render(*coeff_bracket(w, sym(0, 2), sym(1, 3))) == "-3*W_5");
}

TEST_CASE("window bracket is bilinear") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> idx(-2, 2), coef(-3, 3), gen(0, 1);
  const CoeffWindow w(heisenberg_virasoro(), 6, HV_SHIFTS);
  for (int t = 0; t < 60; ++t) {
    const WindowElement a = sym(gen(rng), idx(rng)), b = sym(gen(rng), idx(rng)), c = sym(gen(rng), idx(rng));
    const Poly p(coef(rng)), q(coef(rng));
    auto lhs = coeff_bracket(w, p * a + q * b, c);
    auto ac = coeff_bracket(w, a, c), bc = coeff_bracket(w, b, c);
    REQUIRE(lhs);
    CHECK(*lhs == p * *ac + q * *bc);
  }
}

TEST_CASE("window identities") {
  const Report vir = window_checks(CoeffWindow(virasoro(), 6));
  CHECK(vir.ok());
  CHECK(vir.find("window_jacobi"));

  const Report empty = window_checks(CoeffWindow(virasoro(), 0));
  CHECK(empty.ok());

  const Report lsc = window_checks(CoeffWindow(hv_lsc1(), 3));
  CHECK(lsc.find("window_left_symmetry"));
  CHECK(lsc.ok());

  ConformalAlgebra broken = heisenberg_virasoro();
  broken.set_product("W", "W", "L", P("1"));
  CHECK_FALSE(window_checks(CoeffWindow(broken, 3)).ok());
}

TEST_CASE("lifted Rota-Baxter operators") {
  const CatalogEntry f1 = catalog("hv_rb_family1");
  const CoeffWindow w(*f1.algebra, 6, HV_SHIFTS);
  const Report r = window_checks(w, *f1.map);
  CHECK(r.ok());
  const Check* rb = r.find("lifted_rota_baxter");
  REQUIRE(rb);
  CHECK(rb->notes.front() != "0 admissible pairs");

  // T(L_m) = -b (L_m + W_{m+1}) on displayed indices
  auto t = lift(w, *f1.map, sym(0, 2));
  REQUIRE(t);
  CHECK(*t == sym(0, 2, P("-b", {"b"})) + sym(1, 3, P("-b", {"b"})));

  const CatalogEntry f2 = catalog("hv_rb_family2");
  CHECK(window_checks(CoeffWindow(*f2.algebra, 4, HV_SHIFTS), *f2.map).ok());

  CHECK_FALSE(window_checks(CoeffWindow(virasoro(), 4), ModuleMap::identity(1)).ok());
}
