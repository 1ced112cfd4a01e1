#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tate/gallery.hpp"

using namespace tate;

static const EvalParams kP{12, 0, 0};

TEST_CASE("construction spot checks pass on the gallery") {
  for (auto id : {ExampleId::Ex41, ExampleId::Ex44, ExampleId::Ex45,
                  ExampleId::FlatLaurent}) {
    auto g = build_example(id);
    auto bad = construction_spot_checks(g.ring, 2, kP);
    CAPTURE(g.ring.name);
    CHECK(bad.empty());
  }
}

TEST_CASE("power boundedness follows the margin law") {
  auto g = build_example(ExampleId::Ex41);
  auto tb = g.ring.table;
  ExponentVector t(tb, {Rat(1), Rat(0)}), z(tb, {Rat(0), Rat(1)});
  // gauge(T^k) = k: T itself is unbounded, p T is bounded
  CHECK(power_bounded(RingElement::monomial(t, 1), g.ring, kP).verdict == Tri::No);
  auto pt = power_bounded(RingElement::monomial(t, 2), g.ring, kP);
  CHECK(pt.verdict == Tri::Yes);
  // any multiple of Z is bounded because Z^2 = 0
  auto kz = power_bounded(RingElement::monomial(z, Rat(1) / 1024), g.ring, kP);
  CHECK(kz.verdict == Tri::Yes);
  CHECK(kz.witness.kind == BoundednessWitness::Kind::NilpotentPower);
  // flat ring: units of the value field are bounded, p^-1 is not
  auto flat = build_example(ExampleId::FlatLaurent);
  auto ft = ExponentVector(flat.ring.table, {Rat(1)});
  CHECK(power_bounded(RingElement::monomial(ft, 1), flat.ring, kP).verdict == Tri::Yes);
  CHECK(power_bounded(RingElement::one(flat.ring.table).scaled(Rat(1) / 2), flat.ring,
                      kP)
            .verdict == Tri::No);
}

TEST_CASE("topological nilpotence") {
  auto g = build_example(ExampleId::Ex41);
  auto tb = g.ring.table;
  ExponentVector t(tb, {Rat(1), Rat(0)}), z(tb, {Rat(0), Rat(1)});
  CHECK(topologically_nilpotent(RingElement::monomial(z, 7), g.ring, kP).verdict ==
        Tri::Yes);
  // 4T gains a valuation margin under powers; 2T sits exactly on the boundary
  CHECK(topologically_nilpotent(RingElement::monomial(t, 4), g.ring, kP).verdict ==
        Tri::Yes);
  CHECK(topologically_nilpotent(RingElement::monomial(t, 2), g.ring, kP).verdict ==
        Tri::No);
  CHECK(topologically_nilpotent(RingElement::monomial(t, 1), g.ring, kP).verdict ==
        Tri::No);
  CHECK(topologically_nilpotent(RingElement::one(tb), g.ring, kP).verdict == Tri::No);
}

TEST_CASE("uniformity verdicts across the gallery") {
  // the nilpotent line k Z sits inside R^o: not uniform
  auto g41 = build_example(ExampleId::Ex41);
  auto u41 = uniformity(g41.ring, 3, kP);
  CHECK(u41.verdict == UniformityResult::Verdict::NonUniform);
  REQUIRE(u41.witness);
  CHECK(u41.witness->exp("Z") == Rat(1));
  // flat control ring: R^o = R0 exactly
  auto flat = build_example(ExampleId::FlatLaurent);
  auto uf = uniformity(flat.ring, 4, kP);
  CHECK(uf.verdict == UniformityResult::Verdict::Uniform);
  CHECK(uf.n == 0);
  // ex45 base ring is uniform with constant 0
  auto g45 = build_example(ExampleId::Ex45);
  auto u45 = uniformity(g45.ring, 4, kP);
  CHECK(u45.verdict == UniformityResult::Verdict::Uniform);
  CHECK(u45.n == 0);
}

TEST_CASE("localized topology of ex45 loses uniformity") {
  auto g = build_example(ExampleId::Ex45);
  TateRingDesc a = g.ring;
  a.gauge = std::make_shared<DerivedGauge>(
      g.ring.gauge, std::vector<DerivedGauge::Adjunction>{{g.t, AdjoinDir::NonNeg}});
  auto u = uniformity(a, 3, kP);
  CHECK(u.verdict == UniformityResult::Verdict::NonUniform);
  REQUIRE(u.witness);
  CHECK(u.witness->exp("Z") == Rat(1));
}
