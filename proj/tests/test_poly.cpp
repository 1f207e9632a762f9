#include "confyb/poly.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace confyb;
using testing::P;

TEST_CASE("arithmetic normal forms") {
  CHECK((P("d+2*x") + P("-d-2*x")).is_zero());
  CHECK(P("d+2*x") * P("d+2*x") == P("d^2+4*x*d+4*x^2"));
  // distributing b over two terms
  const Poly b = Poly::var("b");
  CHECK(b * P("d+x") == Poly::var("b") * Poly::var("d") + Poly::var("b") * Poly::var("x"));
  CHECK((b * P("d+x")).terms().size() == 2);
  CHECK(P("1/2*x + 1/3*x") == P("5/6*x"));
  CHECK(P("(d+1)^3") == P("d^3+3*d^2+3*d+1"));
  CHECK(P("0").is_zero());
}

TEST_CASE("substitution") {
  CHECK(P("d+2*x").subst("x", P("-x-d")) == P("-d-2*x"));
  CHECK(P("d+2*x").subst("x", Poly()) == P("d"));
  CHECK(P("d1-d2-3*d3").subst("d3", P("-d1-d2")) == P("4*d1+2*d2"));
  CHECK(P("x*y+d").subst("x", P("x")) == P("x*y+d"));
  // simultaneous, not sequential
  CHECK(P("x+2*y").subst({{"x", P("y")}, {"y", P("x")}}) == P("y+2*x"));
}

TEST_CASE("table-checked substitution rejects unknown names") {
  const VarTable t({"b"});
  CHECK_THROWS_AS(poly_subst(t, P("d"), "q", P("1")), PolyError);
  CHECK(poly_subst(t, P("b*d", {"b"}), "b", P("2")) == P("2*d"));
}

TEST_CASE("coefficients and degrees") {
  const Poly p = P("3*d^2*x + d*x - 5*x + 7");
  CHECK(p.degree_in("d") == 2);
  CHECK(p.coefficient("x", 1) == P("3*d^2+d-5"));
  CHECK(p.coefficient("x", 0) == P("7"));
  CHECK(p.constant_term() == 7);
  CHECK_FALSE(p.is_constant());
  CHECK(P("4/3").is_constant());
  const auto parts = p.coefficients_in({"x"});
  CHECK(parts.size() == 2);
}

TEST_CASE("parser grammar") {
  CHECK(P(" 2 * ( d + x ) ^ 2 ") == P("2*d^2+4*d*x+2*x^2"));
  CHECK(P("-x") == -Poly::var("x"));
  CHECK(P("g0 + g1*d", {"g0", "g1"}).variables() == std::set<std::string>{"d", "g0", "g1"});
  CHECK(P("t_1_2_0", {"t_1_2_0"}) == Poly::var("t_1_2_0"));
  CHECK_THROWS_AS(P("q+1"), PolyError);
  CHECK_THROWS_AS(P("d^-1"), PolyError);
  CHECK_THROWS_AS(P("(d+1"), PolyError);
  CHECK_THROWS_AS(P("1/0"), PolyError);
  CHECK_THROWS_AS(VarTable({"x"}).merged(VarTable()), PolyError);
}

TEST_CASE("rendering round-trips through the parser") {
  std::mt19937 rng(7);
  const std::vector<std::string> vars{"d", "x", "y", "b"};
  for (int i = 0; i < 50; ++i) {
    const Poly p = testing::random_poly(rng, vars) * Poly(Rational(1, 3));
    CHECK(P(p.to_string(), {"b"}) == p);
  }
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(11);
  const std::vector<std::string> vars{"d", "x", "y"};
  for (int i = 0; i < 100; ++i) {
    const Poly p = testing::random_poly(rng, vars, 4), q = testing::random_poly(rng, vars, 4),
               r = testing::random_poly(rng, vars, 4);
    CHECK((p + q) + r == p + (q + r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p - p).is_zero());
    CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("substitution composes") {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    const Poly p = testing::random_poly(rng, {"d", "x", "y"});
    const Poly q = testing::random_poly(rng, {"d", "y"});
    const Poly r = testing::random_poly(rng, {"d"});
    // v = x, w = y; x does not occur in r
    const Poly lhs = p.subst("x", q).subst("y", r);
    const Poly rhs = p.subst("y", r).subst("x", q.subst("y", r));
    CHECK(lhs == rhs);
  }
}
