#include <doctest.h>

#include "support/oracle.hpp"

using namespace orbitcalc;

namespace {

Polynomial P(const char* s, int n) { return Polynomial::parse(s, n); }

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("parsing accepts plain and TeX-like input") {
  CHECK(P("(x1-y3)(x1-y4)", 4) == P("(x_1-y_{3})(x_1 - y_4)", 4));
  CHECK(P("1/2*(x1+x2)", 2) == P("\\frac{1}{2}(x_1+x_2)", 2));
  CHECK(P("x1^2 - x1*z3 + z4", 4) == P("x_1^2-x_1z_3+z_4", 4));
  CHECK(P("2x1", 2) == Polynomial::x(2, 1) * mpq_class(2));
  CHECK(P("-(x1+x2)", 2) == -(Polynomial::x(2, 1) + Polynomial::x(2, 2)));
  CHECK_THROWS_AS(P("x5", 4), InputError);
  CHECK_THROWS_AS(P("(x1", 2), InputError);
}

TEST_CASE("printing round-trips") {
  const Polynomial f = P("-(x1-y3)(x1-y4)(x3-y3)(x3-y4) + 1/3*z2", 4);
  CHECK(P(f.str().c_str(), 4) == f);
  CHECK(P("x1^2 - x1*z3 + z4", 4).str() == "x1^2 - x1*z3 + z4");
  CHECK(Polynomial(3).str() == "0");
}

TEST_CASE("arithmetic") {
  const Polynomial x1 = Polynomial::x(2, 1), x2 = Polynomial::x(2, 2);
  CHECK((x1 + x2) * (x1 - x2) == x1.pow(2) - x2.pow(2));
  CHECK(((x1 + x2).pow(3)).degree() == 3);
  CHECK((x1.pow(2) - x2.pow(2)).exact_div(x1 - x2) == x1 + x2);
  CHECK_THROWS_AS((x1.pow(2) + x2).exact_div(x1 - x2), InternalError);
  CHECK((x1 - x1).is_zero());
  CHECK(P("x1^2 + y1*x2", 2).is_homogeneous());
  CHECK_FALSE(P("x1^2 + y1", 2).is_homogeneous());
}

TEST_CASE("Weyl group action on polynomials") {
  CHECK(weyl_act(RootType::A, 1, Polynomial::x(3, 1)) == Polynomial::x(3, 2));
  CHECK(weyl_act(RootType::B, 3, Polynomial::x(3, 3).pow(2)) == Polynomial::x(3, 3).pow(2));
  CHECK(weyl_act(RootType::C, 2, Polynomial::x(2, 2)) == -Polynomial::x(2, 2));
  const Polynomial x1x2 = Polynomial::x(2, 1) * Polynomial::x(2, 2);
  CHECK(weyl_act(RootType::D, 2, x1x2) == x1x2);
  CHECK(weyl_act(RootType::D, 2, Polynomial::x(2, 1)) == -Polynomial::x(2, 2));
  // y and z are untouched.
  CHECK(weyl_act(RootType::A, 1, Polynomial::y(2, 1)) == Polynomial::y(2, 1));
  // act agrees with the generators.
  for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D})
    for (int i = 1; i <= simple_root_count(t, 3); ++i) {
      const Polynomial f = P("x1^2*x2 + 3*x3*y1 - x2", 3);
      CHECK(act(simple_reflection(t, 3, i), f) == weyl_act(t, i, f));
    }
}

TEST_CASE("divided differences") {
  CHECK(divided_difference(RootType::A, 1, Polynomial::x(2, 1)) == Polynomial(2, 1));
  CHECK(divided_difference(RootType::A, 1, P("x1*x2 + x1 + x2", 2)).is_zero());
  CHECK(divided_difference(RootType::A, 2, P("-(x1-y3)(x1-y4)(x3-y3)(x3-y4)", 4)) ==
        P("(x1-y3)(x1-y4)(x2+x3-y3-y4)", 4));
  CHECK(divided_difference(RootType::C, 2, Polynomial::x(2, 2)) == Polynomial(2, 1));
  CHECK(divided_difference(RootType::B, 2, Polynomial::x(2, 2)) == Polynomial(2, 2));
  for (RootType t : {RootType::A, RootType::B, RootType::C, RootType::D})
    for (int i = 1; i <= simple_root_count(t, 3); ++i) {
      const Polynomial f = P("x1^3*x2 - 2*x3*y1*x1 + x2^2*x3 - y2", 3);
      CHECK(divided_difference(t, i, f) == oracle::brute_divided_difference(t, 3, i, f));
    }
}

TEST_CASE("restriction to fixed points") {
  const CaseId a = CaseId::make(CaseTag::A_GLpq, 2, 2);
  const Polynomial pm = P("-(x1-y3)(x1-y4)(x3-y3)(x3-y4)", 4);
  CHECK(restrict_at(a, WeylElement::parse("1324", RootType::A), pm) == P("-(y1-y3)(y1-y4)(y2-y3)(y2-y4)", 4));
  CHECK(restrict_at(a, WeylElement::identity(RootType::A, 4), pm).is_zero());
  CHECK(restrict_at(a, WeylElement::identity(RootType::A, 4), P("x1-x4", 4)) == P("y1-y4", 4));
  // Signed substitution.
  const CaseId c = CaseId::make_n(CaseTag::C_Sp_GL, 2);
  CHECK(restrict_at(c, WeylElement::parse("-21", RootType::C), P("x1+2*x2", 2)) == P("-y2+2*y1", 2));
  // Case 7: y_{p+1} restricts to 0.
  const CaseId odd = CaseId::make(CaseTag::D_SO_OoddxOodd, 1, 2);
  CHECK(restrict_at(odd, WeylElement::identity(RootType::D, 3), P("x1*x2*x3", 3)).is_zero());
}

TEST_CASE("elementary symmetric polynomials") {
  const std::vector<Polynomial> v = {Polynomial::y(4, 3), Polynomial::y(4, 4)};
  CHECK(elem_sym(1, v, 4) == P("y3+y4", 4));
  CHECK(elem_sym(2, v, 4) == P("y3*y4", 4));
  CHECK(elem_sym(3, v, 4).is_zero());
  CHECK(elem_sym(0, v, 4) == Polynomial(4, 1));
  std::vector<Polynomial> xs;
  for (int i = 1; i <= 5; ++i) xs.push_back(Polynomial::x(5, i));
  for (int k = 0; k <= 6; ++k) CHECK(elem_sym(k, xs, 5) == oracle::brute_elem(k, xs, 5));
}

TEST_CASE("Delta determinant") {
  CHECK(delta(1, WeylElement::identity(RootType::C, 1), 1) == P("x1+y1", 1));
  CHECK(delta(2, WeylElement::identity(RootType::C, 2), 2) == P("(x1*x2+y1*y2)(x1+x2+y1+y2)", 2));
  // Against the Leibniz expansion, both conventions, a few signed w.
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : weyl_group(RootType::C, n)) {
      if ((w.values[0] + 7 * n) % 3) continue;  // thin the sample
      for (int m = std::max(1, n - 1); m <= n; ++m) {
        REQUIRE(delta(m, w, n) == oracle::brute_delta(m, w.values, n, 2));
        REQUIRE(delta(m, w, n, DeltaC0::One) == oracle::brute_delta(m, w.values, n, 1));
      }
    }
  CHECK(delta(0, WeylElement::identity(RootType::C, 2), 2) == Polynomial(2, 1));  // empty determinant
  CHECK_THROWS_AS(delta(3, WeylElement::identity(RootType::C, 2), 2), InputError);
  CHECK_THROWS_AS(delta(-1, WeylElement::identity(RootType::C, 2), 2), InputError);
  CHECK_THROWS_AS(delta(2, WeylElement::identity(RootType::C, 3), 2), InputError);
}

TEST_CASE("Chern substitution") {
  const std::vector<ChernBlock> blocks = {{{1, 2}, {1, 2}}, {{3, 4}, {3, 4}}};
  const Polynomial closed = P("(x1-y3)(x1-y4)(x2-y3)(x2-y4)", 4);
  CHECK(chern_substitute(closed, blocks) == P("(x1^2 - x1*z3 + z4)(x2^2 - x2*z3 + z4)", 4));
  CHECK(chern_substitute(P("y3+y4", 4), blocks) == Polynomial::z(4, 3));
  CHECK_THROWS_AS(chern_substitute(P("y3", 4), blocks), InputError);
  CHECK(chern_expand(chern_substitute(closed, blocks), blocks) == closed);
}

TEST_CASE("factored printing") {
  Factored f;
  f.n = 4;
  f.scalar = -1;
  f.groups = {{P("x1-y3", 4), P("x1-y4", 4)}};
  CHECK(f.expand() == -P("(x1-y3)(x1-y4)", 4));
  CHECK(P(f.str().c_str(), 4) == f.expand());
}

}  // TEST_SUITE
