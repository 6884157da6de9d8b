#include <doctest.h>

#include "eqschubert/errors.hpp"
#include "eqschubert/poly.hpp"
#include "support.hpp"

using namespace eqschubert;
using eqschubert::testing::P;
using eqschubert::testing::random_poly;

namespace {

const std::vector<VarId> kMixed = {VarId::x(1), VarId::x(2), VarId::x(3), VarId::t(1), VarId::t(2), VarId::q(1)};

// Divided difference computed the long way: antisymmetrize, then long-divide.
Poly divdiff_oracle(const Poly& p, int i, Family f) {
  VarId a(f, i), b(f, i + 1);
  return exact_divide(p - swap_variables(p, a, b), Poly(a) - Poly(b));
}

}  // namespace

TEST_CASE("variable names round-trip") {
  for (VarId v : {VarId::x(3), VarId::t(12), VarId::q(2), VarId::alpha(4), VarId::c(2, 5), VarId::d(1, 1),
                  VarId::g(3, 0), VarId::h(2, 7), VarId::sigma(1, 2)}) {
    CHECK(VarId::parse(v.name()) == v);
  }
  CHECK_THROWS_AS(VarId::parse("c3_2"), ParseError);
  CHECK_THROWS_AS(VarId::parse("x0"), ParseError);
  CHECK_THROWS_AS(VarId::parse("z1"), ParseError);
  CHECK_THROWS_AS(VarId::c(0, 1), Error);
}

TEST_CASE("variable order follows family then indices") {
  CHECK(VarId::x(9) < VarId::t(1));
  CHECK(VarId::t(9) < VarId::y(1));
  CHECK(VarId::q(1) < VarId::c(1, 1));
  CHECK(VarId::h(9, 9) < VarId::alpha(1));
  CHECK(VarId::c(1, 3) < VarId::c(2, 2));
}

TEST_CASE("arith basics") {
  CHECK(arith(P("x1 - t1"), P("t1"), ArithKind::Add) == P("x1"));
  CHECK(arith(P("x1*x2 + 3"), Poly(), ArithKind::Mul).is_zero());
  CHECK(arith(P("x1"), P("x1"), ArithKind::Sub).is_zero());
  // Factored and expanded forms of the top Fl(3) class.
  Poly row231 = P("x1*x2 + q1 - (x1 + x2)*t1 + t1^2");
  Poly row321 = arith(P("x1 - t2"), row231, ArithKind::Mul);
  CHECK(row321 == P("x1^2*x2 + x1*q1 - x1^2*t1 - x1*x2*t1 + x1*t1^2 - x1*x2*t2 - q1*t2 + x1*t1*t2 + x2*t1*t2 - t1^2*t2"));
  CHECK(exact_divide(row321, P("x1 - t2")) == row231);
}

TEST_CASE("text rendering and parsing") {
  CHECK(to_string(Poly()) == "0");
  CHECK(to_string(P("1")) == "1");
  CHECK(to_string(P("t1 - x1")) == "-x1 + t1");
  CHECK(to_string(P("-2*x1^2 + 3")) == "-2*x1^2 + 3");
  CHECK(to_string(P("(x1+x2)^2")) == "x1^2 + 2*x1*x2 + x2^2");
  CHECK(P("c1_2*g1_1 - s2_1") == Poly(VarId::c(1, 2)) * Poly(VarId::g(1, 1)) - Poly(VarId::sigma(2, 1)));
  CHECK(P("123456789012345678901234567890*x1").leading_term().coeff == Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(P("x1 +"), ParseError);
  CHECK_THROWS_AS(P("(x1"), ParseError);
  CHECK_THROWS_AS(P("x1 $ 2"), ParseError);
}

TEST_CASE("json rendering") {
  Poly p = P("2*x1^2*t1 - q1 + 99999999999999999999");
  std::string js = to_json(p);
  CHECK(js == R"({"terms":[{"coeff":2,"monomial":{"x1":2,"t1":1}},{"coeff":-1,"monomial":{"q1":1}},)"
              R"({"coeff":"99999999999999999999","monomial":{}}]})");
  CHECK(poly_from_json(js) == p);
  CHECK(to_json(poly_from_json(js)) == js);
  CHECK_THROWS_AS(poly_from_json("{\"terms\":3}"), ParseError);
  CHECK_THROWS_AS(poly_from_json("nope"), ParseError);
}

TEST_CASE("substitute") {
  CHECK(substitute(P("g1_1"), Bindings{{VarId::g(1, 1), P("q1")}}) == P("q1"));
  Bindings elem = {{VarId::c(1, 1), P("x1")}, {VarId::c(1, 2), P("x1+x2")}, {VarId::c(2, 2), P("x1*x2")}};
  CHECK(substitute(P("c1_1*c1_2 - c2_2"), elem) == P("x1^2"));
  CHECK(alpha_rewrite(P("t2 - t1"), 3) == P("-a1"));
  CHECK(alpha_rewrite(P("t3 - t1"), 3) == P("-a1 - a2"));
  CHECK(alpha_rewrite(P("(t2-t1)*(t3-t2)"), 3) == P("a1*a2"));
  CHECK(substitute(P("x1 + x2"), Bindings{{VarId::x(1), P("x2")}, {VarId::x(2), P("x1")}}) == P("x1 + x2"));
  CHECK_THROWS_AS(substitute(P("x1 + t1"), Bindings{{VarId::x(1), P("1")}}, Unmapped::Reject), Error);
}

TEST_CASE("exact_divide") {
  CHECK(exact_divide(P("x1^2 - x2^2"), P("x1 - x2")) == P("x1 + x2"));
  CHECK(exact_divide(Poly(), P("x1 - x2")).is_zero());
  CHECK_THROWS_AS(exact_divide(P("x1^2 + 1"), P("x1 - x2")), NotDivisible);
  CHECK_THROWS_AS(exact_divide(P("3*x1"), P("2")), NotDivisible);
}

TEST_CASE("divided differences") {
  CHECK(divided_difference(P("x1"), 1, Family::X) == P("1"));
  CHECK(divided_difference(P("x1*x2"), 1, Family::X).is_zero());
  CHECK(divided_difference(P("x1^2"), 1, Family::X) == P("x1 + x2"));
  CHECK(divided_difference(P("y2^3*t1"), 2, Family::Y) == P("(y2^2 + y2*y3 + y3^2)*t1"));
  CHECK(divided_difference(P("x3"), 1, Family::X).is_zero());
}

TEST_CASE("symmetric functions") {
  auto t = var_range(Family::T, 1, 3);
  CHECK(elementary_symmetric(1, t) == P("t1+t2+t3"));
  CHECK(elementary_symmetric(2, var_range(Family::X, 1, 2)) == P("x1*x2"));
  CHECK(elementary_symmetric(4, var_range(Family::X, 1, 3)).is_zero());
  CHECK(elementary_symmetric(0, {}) == P("1"));
  CHECK(complete_symmetric(0, var_range(Family::Y, 1, 2)) == P("1"));
  CHECK(complete_symmetric(2, var_range(Family::Y, 1, 1)) == P("y1^2"));
  CHECK(complete_symmetric(2, var_range(Family::Y, 1, 2)) == P("y1^2 + y1*y2 + y2^2"));
  CHECK(complete_symmetric(3, {}).is_zero());
}

TEST_CASE("grading") {
  Grading g;
  CHECK(graded_degree(P("x1*x2 + q1 - t1^2")) == 2);
  CHECK(graded_degree(P("c2_3 + g1_1 + x1*t1")) == 2);
  CHECK_FALSE(graded_degree(P("x1 + 1")).has_value());
  Grading partial{{3}};
  CHECK(graded_degree(P("q1 + x1^3"), partial) == 3);
  CHECK(graded_degree(P("s2_1 + x1^2"), g) == 2);
}

TEST_CASE("property: ring axioms on random triples") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    Poly a = random_poly(rng, kMixed), b = random_poly(rng, kMixed), c = random_poly(rng, kMixed);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == Poly());
    REQUIRE(parse_poly(to_string(a)) == a);
    REQUIRE(poly_from_json(to_json(a)) == a);
    if (!b.is_zero()) REQUIRE(exact_divide(a * b, b) == a);
  }
}

TEST_CASE("property: divided difference identities") {
  std::mt19937_64 rng(7);
  const std::vector<VarId> xs = {VarId::x(1), VarId::x(2), VarId::x(3), VarId::x(4), VarId::t(1)};
  for (int trial = 0; trial < 1000; ++trial) {
    Poly p = random_poly(rng, xs, 5, 4), r = random_poly(rng, xs, 5, 4);
    int i = 1 + trial % 3;
    REQUIRE(divided_difference(p, i, Family::X) == divdiff_oracle(p, i, Family::X));
    REQUIRE(divided_difference(divided_difference(p, i, Family::X), i, Family::X).is_zero());
    REQUIRE(divided_difference(p + 3 * r, i, Family::X) ==
            divided_difference(p, i, Family::X) + 3 * divided_difference(r, i, Family::X));
    if (i < 3) {
      auto d = [](const Poly& s, int j) { return divided_difference(s, j, Family::X); };
      REQUIRE(d(d(d(p, i), i + 1), i) == d(d(d(p, i + 1), i), i + 1));
    }
    REQUIRE(divided_difference(divided_difference(p, 1, Family::X), 3, Family::X) ==
            divided_difference(divided_difference(p, 3, Family::X), 1, Family::X));
  }
}

TEST_CASE("property: alpha round trip and graded multiplication") {
  std::mt19937_64 rng(99);
  const std::vector<VarId> ts = {VarId::t(1), VarId::t(2), VarId::t(3), VarId::t(4)};
  for (int trial = 0; trial < 1000; ++trial) {
    Poly p = random_poly(rng, ts);
    REQUIRE(alpha_unrewrite(alpha_rewrite(p, 4), 4) == p);
    Poly h1 = elementary_symmetric(1 + trial % 3, ts), h2 = complete_symmetric(trial % 4, ts);
    REQUIRE(graded_degree(h1 * h2) == *graded_degree(h1) + *graded_degree(h2));
  }
}
