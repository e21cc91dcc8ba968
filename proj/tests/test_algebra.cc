#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "pbt/algebra.hh"

using namespace pbt;

namespace {

Ring ring(std::vector<std::string> vars) {
  Ring r;
  r.vars = std::move(vars);
  return r;
}

Poly P(const Ring& r, const std::string& s) { return parse_poly(r, s); }

std::vector<Poly> Ps(const Ring& r, const std::vector<std::string>& ss) {
  return parse_polys(r, ss);
}

Poly spoly(const Ring& r, const Poly& a, const Poly& b) {
  Expv l = mono_lcm(a.lt().m, b.lt().m);
  Poly ta = mul_term(r, a, b.lt().c, mono_div(l, a.lt().m));
  Poly tb = mul_term(r, b, a.lt().c, mono_div(l, b.lt().m));
  return sub(r, ta, tb);
}

}  // namespace

TEST_CASE("parse and print round trip") {
  Ring r = ring({"x", "y", "p"});
  for (const std::string& s :
       {"x^2*y - 3*x + 2", "-x + y", "p^3 - 1", "x", "7", "-p"}) {
    Poly a = P(r, s);
    CHECK(P(r, to_string(r, a)) == a);
  }
  CHECK(to_string(r, P(r, "(x + y)*(x - y)")) == "x^2 - y^2");
  CHECK(to_string(r, P(r, "0")) == "0");
  CHECK(P(r, "2*(x + 1)^2") == P(r, "2*x^2 + 4*x + 2"));
  CHECK_THROWS(P(r, "q + 1"));
  CHECK_THROWS(P(r, "x +"));
}

TEST_CASE("arithmetic") {
  Ring r = ring({"x", "y"});
  Poly x = poly_var(r, 0), y = poly_var(r, 1);
  CHECK(pow(r, add(r, x, y), 2) == P(r, "x^2 + 2*x*y + y^2"));
  CHECK(sub(r, x, x).is_zero());
  CHECK(mul(r, P(r, "x + 1"), P(r, "x - 1")) == P(r, "x^2 - 1"));
  CHECK(neg(P(r, "x - y")) == P(r, "y - x"));
  CHECK(mul_int(P(r, "x + y"), 3) == P(r, "3*x + 3*y"));
  CHECK(mul_term(r, P(r, "x + y"), 2, Expv{1, 0}) == P(r, "2*x^2 + 2*x*y"));
  CHECK(content(P(r, "2*x + 4*y")) == 2);
  CHECK(primitive(P(r, "-2*x - 4*y")) == P(r, "x + 2*y"));
  CHECK(poly_from_terms(r, {{1, {1, 0}}, {2, {1, 0}}, {-3, {1, 0}}}).is_zero());
  CHECK(poly_from_terms(r, {{2, {1, 1}}, {1, {2, 0}}}).lt().m == Expv{2, 0});
}

TEST_CASE("calculus and division") {
  Ring r = ring({"x", "y"});
  Poly f = P(r, "x^2*y + x*y");
  CHECK(degree_in(f, 0) == 2);
  CHECK(degree_in(f, 1) == 1);
  CHECK(derivative(r, f, 0) == P(r, "2*x*y + y"));
  CHECK(substitute(r, P(r, "x^2 + y"), 0, poly_var(r, 1)) == P(r, "y^2 + y"));
  CHECK(uses_var(f, 0));
  CHECK_FALSE(uses_var(P(r, "y^2"), 0));
  CHECK(divide_exact(r, P(r, "x^2 - y^2"), P(r, "x - y")) == P(r, "x + y"));
  CHECK_THROWS(divide_exact(r, P(r, "x^2 + y"), P(r, "x")));
}

TEST_CASE("map_vars embeds into a larger ring") {
  Ring small = ring({"x", "y"});
  Ring big = ring({"t", "x", "y", "p"});
  Poly a = P(small, "x^2 - y");
  CHECK(map_vars(big, a, {1, 2}) == P(big, "x^2 - y"));
}

TEST_CASE("normal form and membership") {
  Ring r = ring({"x", "y"});
  std::vector<Poly> G = Ps(r, {"x^2 - y"});
  CHECK(normal_form(r, P(r, "x^4"), G) == P(r, "y^2"));
  CHECK(normal_form(r, P(r, "2*x^4"), G) == P(r, "y^2"));
  CHECK(normal_form(r, P(r, "x^2 - y"), G).is_zero());
  CHECK(ideal_contains(r, Ps(r, {"x", "y"}), P(r, "x^2 + y")));
  CHECK_FALSE(ideal_contains(r, Ps(r, {"x^2"}), P(r, "x")));
  CHECK(ideal_contains_all(r, Ps(r, {"x", "y"}), Ps(r, {"x*y", "y^2 - x"})));
  CHECK_FALSE(ideal_contains_all(r, Ps(r, {"x"}), Ps(r, {"x", "y"})));
}

TEST_CASE("groebner bases are canonical") {
  Ring r = ring({"x", "y"});
  auto g1 = groebner_basis(r, Ps(r, {"x^2 + y^2", "x*y"}));
  auto g2 = groebner_basis(r, Ps(r, {"-3*x*y", "7*x^2 + 7*y^2", "x^2*y"}));
  CHECK(g1 == g2);
  CHECK(ideal_equal(r, Ps(r, {"x^2 + y^2", "x*y"}), g2));
  CHECK(gb_contains(r, g1, P(r, "y^3")));
  CHECK_FALSE(gb_contains(r, g1, P(r, "y^2")));
  for (size_t i = 0; i < g1.size(); ++i)
    for (size_t j = i + 1; j < g1.size(); ++j)
      CHECK(normal_form(r, spoly(r, g1[i], g1[j]), g1).is_zero());
}

TEST_CASE("elimination") {
  Ring r = ring({"t", "x", "y"});
  auto [er, eg] = eliminate(r, Ps(r, {"x - t^2", "y - t^3"}), {"t"});
  CHECK(er.vars == std::vector<std::string>{"x", "y"});
  CHECK(to_strings(er, eg) == std::vector<std::string>{"x^3 - y^2"});
}

TEST_CASE("saturation, two ways") {
  Ring r = ring({"X", "Y", "p"});
  auto I = Ps(r, {"p*X", "p*Y", "X*Y"});
  Poly pp = P(r, "p");
  auto s1 = saturate(r, I, pp);
  auto s2 = saturate_colon(r, I, pp);
  CHECK(ideal_equal(r, s1, Ps(r, {"X", "Y"})));
  CHECK(ideal_equal(r, s1, s2));

  CHECK(ideal_contains(r, saturate(r, Ps(r, {"p^2"}), pp), P(r, "1")));
  CHECK(ideal_equal(r, saturate(r, Ps(r, {"X*Y"}), pp), Ps(r, {"X*Y"})));
}

TEST_CASE("colon ideal") {
  Ring r = ring({"x", "y", "z"});
  CHECK(ideal_equal(r, colon(r, Ps(r, {"x*y", "x*z"}), P(r, "x")), Ps(r, {"y", "z"})));
  CHECK(ideal_equal(r, colon(r, Ps(r, {"x^2"}), P(r, "x")), Ps(r, {"x"})));
}

TEST_CASE("radical membership") {
  Ring r = ring({"x", "y"});
  CHECK(radical_contains(r, Ps(r, {"x^2"}), P(r, "x")));
  CHECK_FALSE(ideal_contains(r, Ps(r, {"x^2"}), P(r, "x")));
  CHECK(radical_contains(r, Ps(r, {"x^2", "y^3"}), P(r, "x + y")));
  CHECK_FALSE(radical_contains(r, Ps(r, {"x^2*y"}), P(r, "x")));
}

TEST_CASE("jacobian and minors") {
  Ring r = ring({"x", "y", "z"});
  auto gens = Ps(r, {"x*y - 1", "x^2 + y^2"});
  PolyMat J = jacobian(r, gens, {0, 1});
  CHECK(J.rows == 2);
  CHECK(J.cols == 2);
  CHECK(J.at(0, 0) == P(r, "y"));
  CHECK(J.at(1, 1) == P(r, "2*y"));
  auto m2 = minors(r, J, 2);
  REQUIRE(m2.size() == 1);
  CHECK(ideal_equal(r, {m2[0]}, Ps(r, {"x^2 - y^2"})));

  PolyMat W = jacobian(r, gens, {0, 1, 2});
  CHECK(W.cols == 3);
  CHECK(minors(r, W, 2).size() == 3);
  CHECK(minors(r, W, 1).size() == 6);

  int seen = 0;
  for_each_minor(r, W, 2, [&](const Poly&) {
    ++seen;
    return false;
  });
  CHECK(seen == 1);
}

TEST_CASE("matrix product and determinant") {
  Ring r = ring({"a", "b", "c", "d"});
  PolyMat m;
  m.rows = m.cols = 2;
  m.a = {poly_var(r, 0), poly_var(r, 1), poly_var(r, 2), poly_var(r, 3)};
  CHECK(mat_det(r, m) == P(r, "a*d - b*c"));
  PolyMat id2;
  id2.rows = id2.cols = 2;
  id2.a = {poly_const(r, 1), poly_zero(), poly_zero(), poly_const(r, 1)};
  PolyMat mm = mat_mul(r, m, id2);
  CHECK(mm.a == m.a);
}

TEST_CASE("tick budget") {
  Ring r = ring({"x", "y", "z"});
  auto F = Ps(r, {"x + 2*y + 2*z - 1", "x^2 + 2*y^2 + 2*z^2 - x", "2*x*y + 2*y*z - y"});
  CHECK_FALSE(BudgetScope::active());
  {
    BudgetScope scope(5);
    CHECK(BudgetScope::active());
    CHECK_THROWS_AS(groebner_basis(r, F), BudgetExhausted);
  }
  CHECK_FALSE(BudgetScope::active());
  CHECK(groebner_basis(r, F).size() >= 3);
}

TEST_CASE("integer helpers") {
  CHECK(int_pow(Int(3), 4) == 81);
  CHECK(int_pow(Int(11), 0) == 1);
  CHECK(mod_nonneg(Int(-7), Int(5)) == 3);
  CHECK(mod_nonneg(Int(10), Int(5)) == 0);
  CHECK(mod_nonneg(Int(3), Int(5)) == 3);
}
