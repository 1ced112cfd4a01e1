#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tate/gallery.hpp"

using namespace tate;

static const EvalParams kP{12, 0, 0};

TEST_CASE("example names round-trip") {
  for (auto id : all_examples()) {
    CHECK(example_from_name(example_name(id)) == id);
  }
  CHECK(!example_from_name("ex47"));
}

TEST_CASE("minimal sequences satisfy and saturate their inequalities") {
  auto s = build_sequences(3);
  CHECK(s.a == std::vector<long>{1, 11, 91});
  CHECK(s.b == std::vector<long>{3, 27, 283});
  auto maxval = [](std::vector<long> v) {
    long m = 0;
    for (long x : v) m = std::max(m, x);
    return m;
  };
  for (long J = 1; J <= 3; ++J) {
    // b(J) > J^2 + J max{b(j): j<J, a(i): i<=J}, minimally
    long m = std::max(maxval({s.a.begin(), s.a.begin() + J}),
                      maxval({s.b.begin(), s.b.begin() + (J - 1)}));
    CHECK(s.b[J - 1] == J * J + J * m + 1);
  }
  for (long I = 2; I <= 3; ++I) {
    long m = std::max(maxval({s.a.begin(), s.a.begin() + (I - 1)}),
                      maxval({s.b.begin(), s.b.begin() + (I - 1)}));
    CHECK(s.a[I - 1] == I * I + I * m + 1);
  }
  CHECK_THROWS_AS(build_sequences(0), std::invalid_argument);
  CHECK_THROWS_AS(build_sequences(15), std::invalid_argument);
}

TEST_CASE("frozen gauge values") {
  auto g41 = build_example(ExampleId::Ex41);
  auto tb = g41.ring.table;
  auto val = [&](const TateRingDesc& r, std::vector<Rat> e) {
    auto v = r.gauge->eval(ExponentVector(r.table, std::move(e)), kP);
    REQUIRE(v.is_exact());
    return v.exact_value();
  };
  CHECK(val(g41.ring, {Rat(3), Rat(0)}) == Rat(3));
  CHECK(val(g41.ring, {Rat(3), Rat(1)}) == Rat(-3));
  auto g43 = build_example(ExampleId::Ex43);
  CHECK(val(g43.ring, {Rat(0), Rat(0)}) == Rat(0));
  CHECK(val(g43.ring, {Rat(0), Rat(1)}) == Rat(0));
  CHECK(val(g43.ring, {Rat(0), Rat(2)}) == Rat(0));
  CHECK(val(g43.ring, {Rat(1), Rat(1)}) == Rat(-1));  // the a(1) generator
  auto g44 = build_example(ExampleId::Ex44, {Int(2), 3, 8});
  std::vector<Rat> e(g44.ring.table->size(), Rat(0));
  e[g44.ring.table->index_of("Z5")] = 1;
  CHECK(val(g44.ring, e) == Rat(0));
  auto g46 = build_example(ExampleId::Ex46);
  CHECK(val(g46.ring, {Rat(0), Rat(0), Rat(0), Rat(2)}) == Rat(0));
}

TEST_CASE("perfectified gauge restricts to the integral one") {
  auto g41 = build_example(ExampleId::Ex41);
  auto g42 = build_example(ExampleId::Ex42);
  for (const auto& e : monomial_window(g41.ring.table, 4)) {
    ExponentVector f(g42.ring.table);
    for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i];
    auto a = g41.ring.gauge->eval(e, kP);
    auto b = g42.ring.gauge->eval(f, kP);
    CHECK(a.status == b.status);
    CHECK(a.upper == b.upper);
  }
  // and it really sees fractional exponents
  auto half = g42.ring.gauge->eval(
      ExponentVector(g42.ring.table, {Rat(1) / 2, Rat(1)}), kP);
  REQUIRE(half.is_exact());
  CHECK(half.exact_value() == Rat(-1) / 2);
}

TEST_CASE("products of listed generators stay integral") {
  auto g43 = build_example(ExampleId::Ex43);
  auto gg = std::dynamic_pointer_cast<const GeneratorGauge>(g43.ring.gauge);
  REQUIRE(gg);
  for (const auto& x : gg->generators())
    for (const auto& y : gg->generators()) {
      auto sum = x.exponent;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y.exponent[i];
      auto v = gg->eval(sum, kP);
      CHECK(v.upper <= XRat(Rat(x.cost + y.cost)));
    }
  // subadditivity closure on the closed-form rings of the last two examples
  for (auto id : {ExampleId::Ex45, ExampleId::Ex46}) {
    auto g = build_example(id);
    auto window = monomial_window(g.ring.table, 1);
    for (const auto& e : window)
      for (const auto& f : window) {
        auto ef = e + f;
        if (!ef) continue;
        auto ve = g.ring.gauge->eval(e, kP), vf = g.ring.gauge->eval(f, kP),
             vs = g.ring.gauge->eval(*ef, kP);
        if (ve.is_exact() && vf.is_exact())
          CHECK(vs.upper <= ve.upper + vf.upper);
      }
  }
}

TEST_CASE("ex44 stratum boundaries agree") {
  auto g = build_example(ExampleId::Ex44, {Int(2), 3, 3});
  auto tb = g.ring.table;
  auto eg = std::dynamic_pointer_cast<const ExpressionGauge>(g.ring.gauge);
  REQUIRE(eg);
  // on the s = 1 stratum with weight w <= |a|, rule (ii) equals the
  // generic |a| - 2w of rule (iii)
  for (long a = -4; a <= 4; ++a)
    for (long i = 1; i <= 3; ++i) {
      if (i > std::abs(a)) continue;
      std::vector<Rat> e(tb->size(), Rat(0));
      e[0] = a;
      e[tb->index_of("Z" + std::to_string(i))] = 1;
      auto v = eg->value_at(ExponentVector(tb, e));
      REQUIRE(v);
      CHECK(*v == Rat(std::abs(a) - 2 * i));
    }
  // and with a = 0 it collapses to the rule (i) value
  std::vector<Rat> e(tb->size(), Rat(0));
  e[tb->index_of("Z1")] = 1;
  auto v0 = eg->value_at(ExponentVector(tb, e));
  REQUIRE(v0);
  CHECK(*v0 == Rat(0));
}

TEST_CASE("fast propositions verify end to end") {
  CHECK(verify_proposition(ExampleId::Ex41, 16, 8).all_pass());
  CHECK(verify_proposition(ExampleId::FlatLaurent, 16, 8).all_pass());
}
