#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tate/gallery.hpp"

using namespace tate;

static const EvalParams kP{12, 0, 0};

static RingElement random_element(std::mt19937& rng, const VarTablePtr& tb,
                                  long radius) {
  std::uniform_int_distribution<long> dterms(1, 3), dexp(-radius, radius),
      dval(-3, 3), dodd(0, 2);
  RingElement x(tb);
  long n = dterms(rng);
  for (long i = 0; i < n; ++i) {
    std::vector<Rat> e;
    for (std::size_t j = 0; j < tb->size(); ++j) {
      const auto& d = tb->decl(j);
      long lo = d.invertible ? -radius : 0;
      long hi = d.nilpotency_cap ? *d.nilpotency_cap - 1 : radius;
      std::uniform_int_distribution<long> de(lo, hi);
      e.emplace_back(de(rng));
    }
    long v = dval(rng);
    Rat coeff = (v >= 0 ? Rat(Int(1) << v) : Rat(1) / Rat(Int(1) << -v)) *
                Rat(2 * dodd(rng) + 1);
    x = x + RingElement::monomial(ExponentVector(tb, std::move(e)), coeff);
  }
  return x;
}

TEST_CASE("triple spot checks hold") {
  auto g = build_example(ExampleId::Ex41);
  auto triple = build_triple(g.ring, g.t);
  CHECK(triple_spot_checks(triple, 2, kP).empty());
  auto flat = build_example(ExampleId::FlatLaurent);
  auto ftriple = build_triple(flat.ring, flat.t);
  CHECK(triple_spot_checks(ftriple, 3, kP).empty());
}

TEST_CASE("localizing at a non-invertible monomial is rejected") {
  auto g = build_example(ExampleId::Ex41);
  ExponentVector z(g.ring.table, {Rat(0), Rat(1)});
  CHECK_THROWS_AS(build_triple(g.ring, z), std::invalid_argument);
}

TEST_CASE("cech sequence identities on random elements") {
  auto flat = build_example(ExampleId::FlatLaurent);
  auto triple = build_triple(flat.ring, flat.t);
  std::mt19937 rng(7);
  for (int i = 0; i < 60; ++i) {
    RingElement x = random_element(rng, flat.ring.table, 3);
    auto rep = cech_sequence_check(triple, x, 6, kP);
    CHECK(rep.complex_identity);
    CHECK(rep.split_identity);
    CHECK(!rep.injectivity_failure);  // flat ring glues
  }
}

TEST_CASE("ex41 injectivity failure at every precision") {
  auto g = build_example(ExampleId::Ex41);
  auto triple = build_triple(g.ring, g.t);
  ExponentVector z(g.ring.table, {Rat(0), Rat(1)});
  for (long prec = 1; prec <= 6; ++prec) {
    auto rep = cech_sequence_check(triple, RingElement::monomial(z, 1), prec, kP);
    CHECK(rep.complex_identity);
    CHECK(rep.injectivity_failure);
    CHECK(rep.x_zero_in_A_to_horizon);
    CHECK(rep.x_zero_in_B_to_horizon);
    CHECK(rep.x_zero_in_R != Tri::Yes);
  }
}

TEST_CASE("truncation consistency") {
  auto flat = build_example(ExampleId::FlatLaurent);
  auto gauge = flat.ring.gauge;
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    RingElement x = random_element(rng, flat.ring.table, 3);
    long n = std::uniform_int_distribution<long>(0, 4)(rng);
    long N = n + std::uniform_int_distribution<long>(0, 4)(rng);
    auto tN = TruncatedElement::truncate(x, gauge, N, kP);
    auto tn = TruncatedElement::truncate(x, gauge, n, kP);
    auto tNn = TruncatedElement::truncate(tN.representative(), gauge, n, kP);
    CHECK(tNn.equivalent(tn, kP) == Tri::Yes);
    CHECK(membership(x - tN.representative(), *gauge, N, kP) == Tri::Yes);
  }
}

TEST_CASE("glueing obstruction machinery") {
  auto g = build_example(ExampleId::Ex44, {Int(2), 3, 3});
  auto triple = build_triple(g.ring, g.t);
  auto tb = g.ring.table;
  auto zvar = [&](long i) {
    ExponentVector e(tb);
    e[tb->index_of("Z" + std::to_string(i))] = 1;
    return e;
  };
  SeriesSpec a{[&](long n) {
    return n <= 3 ? RingElement::monomial(zvar(n), 1) : RingElement::zero(tb);
  }};
  SeparatingFunctional rho{[&](long n) { return zvar(std::min<long>(n, 3)); }};
  auto cert = glueing_obstruction(triple, a, a, rho, 4, kP);
  CHECK(cert.obstruction);
  CHECK(cert.truncations_agree);
  CHECK(!cert.blocked_indices.empty());
  // a tail violating its pi^n A0 guarantee is rejected up front
  auto flat = build_example(ExampleId::FlatLaurent);
  auto ftriple = build_triple(flat.ring, flat.t);
  SeriesSpec badtail{[&](long) { return RingElement::one(flat.ring.table); }};
  SeparatingFunctional frho{[&](long) { return ExponentVector(flat.ring.table); }};
  CHECK_THROWS_AS(glueing_obstruction(ftriple, badtail, badtail, frho, 2, kP),
                  std::invalid_argument);
}

TEST_CASE("alain bound validates its inputs") {
  auto flat = build_example(ExampleId::FlatLaurent);
  auto tb = flat.ring.table;
  RingElement one = RingElement::one(tb);
  // partition of unity that does not sum to 1
  CHECK_THROWS_AS(alain_bound(flat.ring, {one}, {one + one}, one, {}, kP),
                  std::invalid_argument);
}

TEST_CASE("valuation samples are additive and respect the cover") {
  auto g = build_example(ExampleId::Ex41);
  auto tb = g.ring.table;
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> dw(-4, 4), dpi(1, 3);
  for (int i = 0; i < 40; ++i) {
    ValuationSample s;
    s.pi_value = Rat(dpi(rng));
    s.weights["T"] = Rat(dw(rng));
    s.weights["Z"] = Rat(dw(rng));
    // multiplicativity on monomials
    ExponentVector t(tb, {Rat(1), Rat(0)});
    XRat vt = valuation_sample(g.ring, s, RingElement::monomial(t, 2));
    CHECK(vt == XRat(s.pi_value + s.weights["T"]));
    // every sample lies on at least one cover piece
    bool u = cover_membership(g.ring, s, t, CoverPiece::U);
    bool v = cover_membership(g.ring, s, t, CoverPiece::V);
    CHECK((u || v));
  }
  // nilpotent exponents give +inf
  ValuationSample s;
  ExponentVector z(tb, {Rat(0), Rat(1)});
  CHECK(valuation_sample(g.ring, s, RingElement::monomial(z, 1)).is_plus_inf());
}
