#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tate/element.hpp"
#include "tate/expr.hpp"

using namespace tate;

static VarTablePtr table2() {
  return std::make_shared<VarTable>(
      Int(2), std::vector<VariableDecl>{{"T", true, std::nullopt, false},
                                        {"Z", false, 2, false}});
}

TEST_CASE("padic valuation") {
  Int p = 2;
  CHECK(padic_valuation(Rat(8), p) == XRat(3));
  CHECK(padic_valuation(Rat(12), p) == XRat(2));
  CHECK(padic_valuation(Rat(1) / 4, p) == XRat(-2));
  CHECK(padic_valuation(Rat(3) / 5, p) == XRat(0));
  CHECK(padic_valuation(Rat(0), p).is_plus_inf());
  CHECK(padic_valuation(Rat(-6), p) == XRat(1));
  CHECK(padic_valuation(Rat(9), Int(3)) == XRat(2));
  // multiplicativity on a small sample
  for (long a : {1, 2, 3, 4, 6, 12})
    for (long b : {1, 2, 5, 8}) {
      XRat va = padic_valuation(Rat(a), p), vb = padic_valuation(Rat(b), p);
      CHECK(padic_valuation(Rat(a) * Rat(b), p) == va + vb);
    }
}

TEST_CASE("rational floor and ceil") {
  CHECK(rat_ceil(Rat(7) / 2) == 4);
  CHECK(rat_ceil(Rat(-7) / 2) == -3);
  CHECK(rat_ceil(Rat(3)) == 3);
  CHECK(rat_floor(Rat(7) / 2) == 3);
  CHECK(rat_floor(Rat(-7) / 2) == -4);
  CHECK(rat_floor(Rat(-3)) == -3);
}

TEST_CASE("extended rationals order and arithmetic") {
  XRat mi = XRat::minus_inf(), pi = XRat::plus_inf(), z = XRat(0);
  CHECK(mi < z);
  CHECK(z < pi);
  CHECK(mi < pi);
  CHECK(min(mi, z) == mi);
  CHECK(max(z, pi) == pi);
  CHECK((pi + z).is_plus_inf());
  CHECK((mi + z).is_minus_inf());
  CHECK((-mi).is_plus_inf());
  CHECK_THROWS_AS(pi + mi, std::domain_error);
  CHECK_THROWS_AS(mi.value(), std::domain_error);
}

TEST_CASE("expression point evaluation") {
  // max(T, -T) as abs, under guard Z == 0
  auto v = e_abs(e_var(0));
  Guard g{{{e_var(1), Cmp::Eq, e_const(0)}}};
  auto e = e_cases({{g, v}});
  CHECK(*eval_point(*e, {Rat(-3), Rat(0)}) == Rat(3));
  CHECK(!eval_point(*e, {Rat(-3), Rat(1)}).has_value());
  CHECK(eval_guard(g, {Rat(5), Rat(0)}));
  CHECK(!eval_guard(g, {Rat(5), Rat(1)}));
  auto m = e_min({e_var(0), e_mul(e_const(2), e_var(1))});
  CHECK(*eval_point(*m, {Rat(7), Rat(1)}) == Rat(2));
}

TEST_CASE("polynomial helpers") {
  Poly a{Rat(1), Rat(2)};      // 1 + 2t
  Poly b{Rat(-1), Rat(0), Rat(3)};  // -1 + 3t^2
  CHECK(poly_eval(poly_add(a, b), Rat(2)) == Rat(16));
  CHECK(poly_eval(poly_mul(a, b), Rat(2)) == Rat(55));
  CHECK(poly_eventual_sign(b) == 1);
  CHECK(poly_eventual_sign(poly_neg(b)) == -1);
  CHECK(poly_eventual_sign(Poly{}) == 0);
  // all sign changes of b inside the root bound
  long r = poly_root_bound(b);
  CHECK(poly_eval(b, Rat(r + 1)) > 0);
}

TEST_CASE("ray evaluation stabilizes") {
  // abs(T) along T = -5 + t: eventually t - 5
  auto e = e_abs(e_var(0));
  RayValue rv = eval_ray(*e, {Rat(-5), Rat(0)}, {Rat(1), Rat(0)});
  REQUIRE(rv.supported);
  for (long t = rv.stable_from + 1; t < rv.stable_from + 5; ++t)
    CHECK(poly_eval(rv.poly, Rat(t)) == *eval_point(*e, {Rat(-5 + t), Rat(0)}));
}

TEST_CASE("exponent vectors respect declarations") {
  auto tb = table2();
  ExponentVector e(tb, {Rat(-2), Rat(1)});
  CHECK(e.declaration_valid());
  ExponentVector bad(tb, {Rat(1) / 2, Rat(0)});
  CHECK(!bad.declaration_valid());  // T not p-divisible here
  ExponentVector capped(tb, {Rat(0), Rat(2)});
  CHECK(!capped.declaration_valid());  // Z^2 = 0
  // product hitting the nilpotency cap vanishes
  ExponentVector z(tb, {Rat(0), Rat(1)});
  CHECK(!(z + z).has_value());
  CHECK(!(e + z).has_value());  // e already carries Z^1
  ExponentVector tpow(tb, {Rat(3), Rat(0)});
  CHECK((tpow + z).has_value());
  CHECK(e.scaled(2)[0] == Rat(-4));
  CHECK(ExponentVector(tb).str() == "1");
  CHECK(e.str() == "T^-2 Z");
}

TEST_CASE("ring elements keep canonical form") {
  auto tb = table2();
  ExponentVector t(tb, {Rat(1), Rat(0)}), z(tb, {Rat(0), Rat(1)});
  RingElement x = RingElement::monomial(t, Rat(2)) + RingElement::monomial(z, Rat(1));
  RingElement y = RingElement::monomial(t, Rat(-2));
  CHECK((x + y).terms().size() == 1);  // 2T cancels exactly
  CHECK((x - x).is_zero());
  // Z * Z dies by nilpotency
  RingElement zz = RingElement::monomial(z, Rat(1)) * RingElement::monomial(z, Rat(1));
  CHECK(zz.is_zero());
  RingElement u = RingElement::one(tb) + RingElement::monomial(t, Rat(1));
  CHECK(u.pow(2) == RingElement::one(tb) + RingElement::monomial(t, Rat(2)) +
                        RingElement::monomial(t.scaled(2), Rat(1)));
  // homogeneous components sum back exactly
  Grading g = Grading::canonical(*tb);
  RingElement sum(tb);
  for (const auto& [w, part] : (x + u).homogeneous_components(g)) sum = sum + part;
  CHECK(sum == x + u);
}
