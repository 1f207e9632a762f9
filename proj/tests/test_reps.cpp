#include "confyb/catalog.hpp"
#include "confyb/reps.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace confyb;
using testing::P;

namespace {

const std::vector<std::string> G{"g0", "g1", "g2", "g3"};

std::vector<Representation> builtin_reps() {
  std::vector<Representation> reps{standard_rep(virasoro(), StandardRep::Adjoint),
                                   standard_rep(heisenberg_virasoro(), StandardRep::Adjoint)};
  for (const auto& A : {hv_lsc1(), hv_lsc2()}) {
    reps.push_back(standard_rep(A, StandardRep::RegularLeft));
    reps.push_back(standard_rep(A, StandardRep::LeftMinusRight));
    reps.push_back(standard_rep(sub_adjacent(A), StandardRep::Adjoint));
  }
  return reps;
}

}  // namespace

TEST_CASE("representation identity") {
  CHECK(check_rep(standard_rep(virasoro(), StandardRep::Adjoint)).ok());
  CHECK(check_rep(standard_rep(hv_lsc1(), StandardRep::RegularLeft)).ok());
  CHECK(check_rep(standard_rep(hv_lsc2(), StandardRep::RegularRight)).ok());

  // constant action L_x v = v: [L_x L]_{x+y} v - (L_x (L_y v) - L_y (L_x v)) = (d+2x)-type term
  Representation bad(virasoro(), {"v"});
  bad.set_action(0, 0, 0, P("1"));
  const Report r = check_rep(bad);
  CHECK_FALSE(r.ok());
  const Check* c = r.find("representation");
  REQUIRE(c);
  REQUIRE(c->residuals.size() == 1);
  // [L_x L] = (d+2x)L acts at x+y as its d replaced by -x-y: (-x-y+2x) = x - y
  CHECK(c->residuals[0].poly == P("x-y"));
}

TEST_CASE("standard representations") {
  const Representation ad = standard_rep(virasoro(), StandardRep::Adjoint);
  CHECK(ad.action().at(0, 0, 0) == P("d+2*x"));

  const Representation right = standard_rep(hv_lsc2(), StandardRep::RegularRight);
  CHECK(right.kind() == AlgebraKind::LeftSymmetric);
  CHECK(right.right_action().at(0, 0, 1) ==
        P("(g0 + g1*(x+d) + g2*(x+d)^2 + g3*(x+d)^3)*(-x-d)", G));

  ConformalAlgebra comm(AlgebraKind::LeftSymmetric, {"e"});
  comm.set_product("e", "e", "e", P("1"));
  CHECK(standard_rep(comm, StandardRep::LeftMinusRight).action().is_zero());

  CHECK_THROWS_AS(standard_rep(virasoro(), StandardRep::RegularLeft), AlgebraError);
  CHECK_THROWS_AS(standard_rep(hv_lsc1(), StandardRep::Adjoint), AlgebraError);
}

TEST_CASE("dual representation") {
  const Representation dual = dual_rep(standard_rep(virasoro(), StandardRep::Adjoint));
  // -((-x-d) + 2x)
  CHECK(dual.action().at(0, 0, 0) == P("d-x"));
  CHECK(dual.module_basis() == std::vector<std::string>{"L*"});

  Representation zero(heisenberg_virasoro(), {"u", "v"});
  CHECK(dual_rep(zero).action().is_zero());

  for (const auto& rep : builtin_reps()) {
    CHECK(check_rep(rep).ok());
    CHECK(check_rep(dual_rep(rep)).ok());
  }
  CHECK_THROWS_AS(dual_rep(standard_rep(hv_lsc1(), StandardRep::RegularRight)), AlgebraError);
}

TEST_CASE("adjoint passes exactly when Jacobi does") {
  ConformalAlgebra broken = heisenberg_virasoro();
  broken.set_product("W", "W", "L", P("1"));
  for (const auto& A : {virasoro(), heisenberg_virasoro(), broken}) {
    const Report axioms = check_axioms(A);
    CHECK(check_rep(standard_rep(A, StandardRep::Adjoint)).ok() == axioms.find("jacobi")->ok());
  }
}

TEST_CASE("semidirect sums") {
  const ConformalAlgebra vir = virasoro();
  const ConformalAlgebra S = semidirect(vir, dual_rep(standard_rep(vir, StandardRep::Adjoint)));
  CHECK(S.basis() == std::vector<std::string>{"L", "L*"});
  CHECK(S.product(0, 1, 1) == P("d-x"));
  // -rho(L)_{-x-d} L* = -(d - (-x-d))
  CHECK(S.product(1, 0, 1) == P("-2*d-x"));
  CHECK(S.product(1, 1, 0).is_zero());
  CHECK(S.product(1, 1, 1).is_zero());
  CHECK(check_axioms(S).ok());

  const ConformalAlgebra direct = semidirect(vir, Representation(vir, {"u"}));
  CHECK(direct.product(0, 0, 0) == P("d+2*x"));
  CHECK(direct.product(0, 1, 1).is_zero());
  CHECK(direct.product(1, 1, 1).is_zero());

  for (const auto& A : {hv_lsc1(), hv_lsc2()}) {
    const ConformalAlgebra lie = lie_double(A);
    CHECK(lie.rank() == 4);
    CHECK(check_axioms(lie).ok());
    const ConformalAlgebra lsc = lsc_double(A);
    CHECK(lsc.kind() == AlgebraKind::LeftSymmetric);
    CHECK(check_axioms(lsc).ok());
    CHECK(check_axioms(semidirect(A, standard_rep(A, StandardRep::RegularRight))).ok());
  }
  for (const auto& rep : builtin_reps()) {
    CHECK(check_axioms(semidirect(rep.algebra(), rep)).ok());
    CHECK(check_axioms(semidirect(rep.algebra(), dual_rep(rep))).ok());
  }
}

TEST_CASE("semidirect rejects a failing module") {
  Representation bad(virasoro(), {"v"});
  bad.set_action(0, 0, 0, P("1"));
  CHECK_THROWS_AS(semidirect(virasoro(), bad), AlgebraError);
}

TEST_CASE("left module from a representation of the sub-adjacent algebra") {
  const ConformalAlgebra A = hv_lsc1();
  const Representation m = left_module(A, dual_rep(standard_rep(A, StandardRep::RegularLeft)));
  CHECK(m.kind() == AlgebraKind::LeftSymmetric);
  CHECK(m.right_action().is_zero());
  CHECK(check_rep(m).ok());
}
