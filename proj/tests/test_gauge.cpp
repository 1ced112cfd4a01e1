#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tate/gallery.hpp"

using namespace tate;

static const EvalParams kP{12, 0, 0};

TEST_CASE("expression gauge certifies exact values off guard boundaries") {
  auto g = build_example(ExampleId::Ex41);
  auto tb = g.ring.table;
  auto eval = [&](long t, long z) {
    return g.ring.gauge->eval(ExponentVector(tb, {Rat(t), Rat(z)}), kP);
  };
  for (long t = -5; t <= 5; ++t) {
    auto v0 = eval(t, 0);
    REQUIRE(v0.is_exact());
    CHECK(v0.exact_value() == Rat(t < 0 ? -t : t));
    auto v1 = eval(t, 1);
    REQUIRE(v1.is_exact());
    CHECK(v1.exact_value() == Rat(t < 0 ? t : -t));
  }
  // Z^2 vanishes: outside the ring
  CHECK(eval(0, 2).status == GaugeVerdict::Status::PlusInf);
}

TEST_CASE("support guards send outside monomials to plus infinity") {
  auto g = build_example(ExampleId::Ex45);
  auto tb = g.ring.table;
  // support is T >= -Z^2; on Z = 0 that forbids negative T exponents
  auto vm1 = g.ring.gauge->eval(ExponentVector(tb, {Rat(-1), Rat(0)}), kP);
  CHECK(vm1.status == GaugeVerdict::Status::PlusInf);
  // T^-4 Z^2 satisfies -4 >= -4
  auto v = g.ring.gauge->eval(ExponentVector(tb, {Rat(-4), Rat(2)}), kP);
  REQUIRE(v.is_exact());
  CHECK(v.exact_value() == Rat(-2));
  auto vout = g.ring.gauge->eval(ExponentVector(tb, {Rat(-5), Rat(2)}), kP);
  CHECK(vout.status == GaugeVerdict::Status::PlusInf);
}

TEST_CASE("generator gauge agrees with the brute-force oracle") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> dexp(-3, 3), dcost(0, 3), dgens(2, 4);
  auto tb = std::make_shared<VarTable>(
      Int(2), std::vector<VariableDecl>{{"X", true, std::nullopt, false},
                                        {"Y", false, std::nullopt, false}});
  long compared = 0;
  for (int inst = 0; inst < 120 && compared < 60; ++inst) {
    std::vector<GeneratorGauge::Generator> gens;
    long n = dgens(rng);
    for (long i = 0; i < n; ++i)
      gens.push_back({ExponentVector(tb, {Rat(dexp(rng)), Rat(std::abs(dexp(rng)))}),
                      dcost(rng)});
    GeneratorGauge g(tb, gens);
    for (long x = -2; x <= 2; ++x) {
      ExponentVector target(tb, {Rat(x), Rat(1)});
      auto v = g.eval(target, kP);
      std::vector<std::size_t> w;
      XRat oracle = generator_gauge_oracle(g, target, 6, &w);
      if (v.is_exact() && v.witness_multiset.size() <= 6) {
        CHECK(oracle == v.upper);
        ++compared;
      } else if (v.status == GaugeVerdict::Status::PlusInf) {
        CHECK(oracle.is_plus_inf());
        ++compared;
      } else if (oracle < v.lower) {
        FAIL("oracle beat the certified lower bound");
      }
    }
  }
  CHECK(compared >= 60);
}

TEST_CASE("generator gauge witness multisets pay their cost") {
  auto g43 = build_example(ExampleId::Ex43);
  auto gg = std::dynamic_pointer_cast<const GeneratorGauge>(g43.ring.gauge);
  REQUIRE(gg);
  auto tb = g43.ring.table;
  for (long z = 0; z <= 2; ++z)
    for (long t = -2; t <= 2; ++t) {
      auto v = gg->eval(ExponentVector(tb, {Rat(t), Rat(z)}), kP);
      if (!v.is_exact()) continue;
      Rat cost = 0;
      ExponentVector sum(tb);
      for (auto i : v.witness_multiset) {
        cost += gg->generators()[i].cost;
        sum = sum - gg->generators()[i].exponent.scaled(-1);
      }
      CHECK(cost == v.exact_value());
      CHECK(sum == ExponentVector(tb, {Rat(t), Rat(z)}));
    }
}

TEST_CASE("derived gauge never exceeds its base") {
  auto g = build_example(ExampleId::Ex41);
  auto tb = g.ring.table;
  DerivedGauge adj(g.ring.gauge, {{g.t, AdjoinDir::NonNeg}});
  for (const auto& e : monomial_window(tb, 3)) {
    auto base = g.ring.gauge->eval(e, kP);
    auto der = adj.eval(e, kP);
    CHECK(der.upper <= base.upper);
  }
  // Z becomes topologically zero once T is adjoined
  auto z = adj.eval(ExponentVector(tb, {Rat(0), Rat(1)}), kP);
  CHECK(z.status == GaugeVerdict::Status::MinusInfCertified);
  CHECK(z.depth >= 12);
  REQUIRE(z.witnesses.size() >= 3);
  // witness at level n is the T^n-shift of Z
  CHECK(z.witnesses[1] == ExponentVector(tb, {Rat(-2), Rat(1)}));
}

TEST_CASE("intersection gauge is the pointwise maximum") {
  auto g = build_example(ExampleId::Ex41);
  auto tb = g.ring.table;
  auto a = std::make_shared<DerivedGauge>(
      g.ring.gauge, std::vector<DerivedGauge::Adjunction>{{g.t, AdjoinDir::NonNeg}});
  auto b = std::make_shared<DerivedGauge>(
      g.ring.gauge, std::vector<DerivedGauge::Adjunction>{{g.t, AdjoinDir::NonPos}});
  auto s = gauge_intersection(a, b);
  for (const auto& e : monomial_window(tb, 3)) {
    auto va = a->eval(e, kP), vb = b->eval(e, kP), vs = s->eval(e, kP);
    CHECK(vs.upper == max(va.upper, vb.upper));
    CHECK(vs.lower == max(va.lower, vb.lower));
  }
}

TEST_CASE("membership is three-valued and term-wise") {
  auto g = build_example(ExampleId::Ex41);
  auto tb = g.ring.table;
  ExponentVector z(tb, {Rat(0), Rat(1)}), t(tb, {Rat(1), Rat(0)});
  CHECK(membership(RingElement::monomial(z, Rat(1) / 2), *g.ring.gauge, 0, kP) ==
        Tri::No);
  CHECK(membership(RingElement::monomial(z, Rat(2)), *g.ring.gauge, 1, kP) == Tri::Yes);
  CHECK(membership(RingElement::monomial(z, Rat(2)), *g.ring.gauge, 2, kP) == Tri::No);
  // one bad term spoils the sum
  RingElement mix = RingElement::monomial(z, Rat(4)) + RingElement::monomial(t, Rat(1) / 2);
  CHECK(membership(mix, *g.ring.gauge, 0, kP) == Tri::No);
  CHECK(membership(RingElement::zero(tb), *g.ring.gauge, 100, kP) == Tri::Yes);
}

TEST_CASE("asymptotic slopes match closed forms") {
  auto g45 = build_example(ExampleId::Ex45);
  auto tb = g45.ring.table;
  auto eg = std::dynamic_pointer_cast<const ExpressionGauge>(g45.ring.gauge);
  REQUIRE(eg);
  // gauge(Z^n) = n: slope one along Z
  auto s = asymptotic_slope(*eg, ExponentVector(tb, {Rat(0), Rat(1)}), kP);
  CHECK(s.kind == SlopeVerdict::Kind::ExactSlope);
  CHECK(s.slope == Rat(1));
  // gauge(T^n) = n as well
  auto st = asymptotic_slope(*eg, ExponentVector(tb, {Rat(1), Rat(0)}), kP);
  CHECK(st.kind == SlopeVerdict::Kind::ExactSlope);
  CHECK(st.slope == Rat(1));
}
