#include "tate/gallery.hpp"

#include <algorithm>
#include <stdexcept>

namespace tate {

namespace {

Rat ppow(const Int& prime, long k) {
  Int pw = boost::multiprecision::pow(prime, static_cast<unsigned>(k < 0 ? -k : k));
  return k >= 0 ? Rat(pw) : Rat(1) / Rat(pw);
}

ExponentVector unit(const VarTablePtr& tb, const std::string& name, Rat k = Rat(1)) {
  ExponentVector e(tb);
  e[tb->index_of(name)] = std::move(k);
  return e;
}

Guard::Atom atom(ExprPtr l, Cmp op, ExprPtr r) {
  return {std::move(l), op, std::move(r)};
}

GalleryRing build_ex41(const GalleryParams& prm, bool p_divisible) {
  auto tb = std::make_shared<VarTable>(
      prm.prime, std::vector<VariableDecl>{{"T", true, std::nullopt, p_divisible},
                                           {"Z", false, 2, false}});
  ExprPtr t = e_var(0), z = e_var(1);
  Guard z0{{atom(z, Cmp::Eq, e_const(0))}};
  Guard z1{{atom(z, Cmp::Eq, e_const(1))}};
  auto value = e_cases({{z0, e_abs(t)}, {z1, e_neg(e_abs(t))}});
  GalleryRing g{TateRingDesc::make(p_divisible ? "ex42" : "ex41", tb,
                                   std::make_shared<ExpressionGauge>(tb, Guard{}, value)),
                unit(tb, "T"),
                {},
                prm};
  return g;
}

GalleryRing build_ex43(const GalleryParams& prm) {
  auto tb = std::make_shared<VarTable>(
      prm.prime, std::vector<VariableDecl>{{"T", true, std::nullopt, false},
                                           {"Z", false, std::nullopt, false}});
  SequencePair s = build_sequences(prm.depth);
  std::vector<GeneratorGauge::Generator> gens;
  gens.push_back({unit(tb, "T"), 1});
  gens.push_back({unit(tb, "T", Rat(-1)), 1});
  for (long n = 1; n <= prm.depth; ++n) {
    ExponentVector alpha(tb);
    alpha[0] = Rat(s.a[static_cast<std::size_t>(n - 1)]);
    alpha[1] = Rat(1);
    gens.push_back({alpha, -n});
    ExponentVector beta(tb);
    beta[0] = Rat(-s.b[static_cast<std::size_t>(n - 1)]);
    beta[1] = Rat(1);
    gens.push_back({beta, -n});
  }
  return {TateRingDesc::make("ex43", tb,
                             std::make_shared<GeneratorGauge>(tb, std::move(gens))),
          unit(tb, "T"),
          {},
          prm};
}

GalleryRing build_ex44(const GalleryParams& prm) {
  std::vector<VariableDecl> decls{{"T", true, std::nullopt, false}};
  for (long i = 1; i <= prm.zvars; ++i)
    decls.push_back({"Z" + std::to_string(i), false, std::nullopt, false});
  auto tb = std::make_shared<VarTable>(prm.prime, std::move(decls));

  ExprPtr a = e_abs(e_var(0));
  ExprPtr s = e_const(0), w = e_const(0);
  for (long i = 1; i <= prm.zvars; ++i) {
    s = e_add(s, e_var(static_cast<std::size_t>(i)));
    w = e_add(w, e_mul(e_const(Rat(i)), e_var(static_cast<std::size_t>(i))));
  }
  Guard s0{{atom(s, Cmp::Eq, e_const(0))}};
  Guard s1{{atom(s, Cmp::Eq, e_const(1))}};
  Guard s2{{atom(s, Cmp::Ge, e_const(2))}};
  auto value = e_cases({{s0, a},
                        {s1, e_sub(a, e_mul(e_const(2), e_min({w, a})))},
                        {s2, e_sub(a, e_mul(e_const(2), w))}});
  return {TateRingDesc::make("ex44", tb,
                             std::make_shared<ExpressionGauge>(tb, Guard{}, value)),
          unit(tb, "T"),
          {},
          prm};
}

GalleryRing build_ex45(const GalleryParams& prm) {
  auto tb = std::make_shared<VarTable>(
      prm.prime, std::vector<VariableDecl>{{"T", true, std::nullopt, false},
                                           {"Z", false, std::nullopt, false}});
  ExprPtr t = e_var(0), z = e_var(1);
  // supported exponents: e_T >= -e_Z^2 (the (pi T)^a (pi Z)^b wedge)
  Guard support{{atom(t, Cmp::Ge, e_neg(e_mul(z, z)))}};
  return {TateRingDesc::make("ex45", tb,
                             std::make_shared<ExpressionGauge>(tb, support, e_add(t, z))),
          unit(tb, "T"),
          {},
          prm};
}

GalleryRing build_ex46(const GalleryParams& prm) {
  auto tb = std::make_shared<VarTable>(
      prm.prime, std::vector<VariableDecl>{{"P", true, std::nullopt, false},
                                           {"Q", true, std::nullopt, false},
                                           {"T", true, std::nullopt, false},
                                           {"Z", false, std::nullopt, false}});
  ExprPtr p = e_var(0), q = e_var(1), a = e_var(2), z = e_var(3);
  ExprPtr d = e_max({e_add(e_add(p, q), a), e_sub(e_add(p, q), a),
                     e_add(p, a), e_sub(q, a)});
  Guard c1{{atom(z, Cmp::Eq, e_const(0)), atom(p, Cmp::Ge, e_const(0)),
            atom(q, Cmp::Ge, e_const(0))}};
  Guard c2{{atom(z, Cmp::Eq, e_const(1)), atom(p, Cmp::Ge, e_const(0))}};
  Guard c3{{atom(z, Cmp::Eq, e_const(1)), atom(q, Cmp::Ge, e_const(0))}};
  Guard c4{{atom(z, Cmp::Ge, e_const(2))}};
  auto value = e_cases({{c1, d}, {c2, d}, {c3, d}, {c4, d}});
  GalleryRing g{TateRingDesc::make("ex46", tb,
                                   std::make_shared<ExpressionGauge>(tb, Guard{}, value)),
                unit(tb, "T"),
                {},
                prm};
  g.pre_adjoin = {{unit(tb, "P"), AdjoinDir::NonNeg},
                  {unit(tb, "Q"), AdjoinDir::NonNeg}};
  return g;
}

GalleryRing build_flat(const GalleryParams& prm) {
  auto tb = std::make_shared<VarTable>(
      prm.prime, std::vector<VariableDecl>{{"T", true, std::nullopt, false}});
  return {TateRingDesc::make("flat_laurent", tb,
                             std::make_shared<ExpressionGauge>(tb, Guard{}, e_const(0))),
          unit(tb, "T"),
          {},
          prm};
}

}  // namespace

std::string example_name(ExampleId id) {
  switch (id) {
    case ExampleId::Ex41: return "ex41";
    case ExampleId::Ex42: return "ex42";
    case ExampleId::Ex43: return "ex43";
    case ExampleId::Ex44: return "ex44";
    case ExampleId::Ex45: return "ex45";
    case ExampleId::Ex46: return "ex46";
    case ExampleId::FlatLaurent: return "flat_laurent";
  }
  throw std::logic_error("example_name: bad id");
}

std::optional<ExampleId> example_from_name(const std::string& name) {
  for (ExampleId id : all_examples())
    if (example_name(id) == name) return id;
  return std::nullopt;
}

std::vector<ExampleId> all_examples() {
  return {ExampleId::Ex41, ExampleId::Ex42, ExampleId::Ex43, ExampleId::Ex44,
          ExampleId::Ex45, ExampleId::Ex46, ExampleId::FlatLaurent};
}

SequencePair build_sequences(long K) {
  if (K < 1 || K > 14)
    throw std::invalid_argument("build_sequences: depth must be in [1, 14]");
  SequencePair s;
  s.a.push_back(1);  // a(1)
  for (long J = 1; J <= K; ++J) {
    long m = 0;  // max{b(j): j < J, a(i): i <= J}
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(J); ++j)
      m = std::max(m, s.b[j]);
    for (std::size_t i = 0; i < static_cast<std::size_t>(J); ++i)
      m = std::max(m, s.a[i]);
    s.b.push_back(J * J + J * m + 1);
    if (J < K) {
      long I = J + 1;
      long m2 = 0;  // max{b(j): j < I, a(i): i < I}
      for (long v : s.b) m2 = std::max(m2, v);
      for (long v : s.a) m2 = std::max(m2, v);
      s.a.push_back(I * I + I * m2 + 1);
    }
  }
  return s;
}

GalleryRing build_example(ExampleId id, const GalleryParams& prm) {
  switch (id) {
    case ExampleId::Ex41: return build_ex41(prm, false);
    case ExampleId::Ex42: return build_ex41(prm, true);
    case ExampleId::Ex43: return build_ex43(prm);
    case ExampleId::Ex44: return build_ex44(prm);
    case ExampleId::Ex45: return build_ex45(prm);
    case ExampleId::Ex46: return build_ex46(prm);
    case ExampleId::FlatLaurent: return build_flat(prm);
  }
  throw std::logic_error("build_example: bad id");
}

TateRingDesc localization_base(const GalleryRing& g) {
  if (g.pre_adjoin.empty()) return g.ring;
  TateRingDesc w = g.ring;
  w.name = g.ring.name + "_loc";
  w.gauge = std::make_shared<DerivedGauge>(g.ring.gauge, g.pre_adjoin);
  return w;
}

namespace {

Report suite_4142(ExampleId id, long horizon, long precision) {
  Report r;
  std::string pre = example_name(id) + ".";
  GalleryRing g = build_example(id);
  long h = horizon > 0 ? horizon : 24;
  long prec = precision > 0 ? precision : 12;
  EvalParams p{h, h, 0};
  const auto& tb = g.ring.table;
  const Int& prime = tb->prime();
  ExponentVector Z = unit(tb, "Z");

  r.add(pre + "pinvZ_outside_R0",
        membership(RingElement::monomial(Z, Rat(1) / Rat(prime)), *g.ring.gauge,
                   Rat(0), p) == Tri::No);

  bool line_ok = true;
  for (long v = -3; v <= 3; ++v) {
    Tri want = v >= 0 ? Tri::Yes : Tri::No;
    line_ok = line_ok &&
              membership(RingElement::monomial(Z, ppow(prime, v)), *g.ring.gauge,
                         Rat(0), p) == want;
  }
  r.add(pre + "kZ_meets_R0_at_v_ge_0", line_ok);

  LocalizationTriple tr = build_triple(g.ring, g.t);
  GaugeVerdict ga = tr.gaugeA->eval(Z, p);
  GaugeVerdict gb = tr.gaugeB->eval(Z, p);
  bool locA = ga.status == GaugeVerdict::Status::MinusInfCertified && ga.depth >= h;
  bool locB = gb.status == GaugeVerdict::Status::MinusInfCertified && gb.depth >= h;
  bool shifts_ok = locA && locB;
  for (long n = 1; shifts_ok && n <= h; ++n) {
    shifts_ok = ga.witnesses[static_cast<std::size_t>(n - 1)] ==
                    Z - g.t.scaled(Rat(n)) &&
                gb.witnesses[static_cast<std::size_t>(n - 1)] ==
                    Z - g.t.scaled(Rat(-n));
  }
  r.add(pre + "Z_locally_zero_to_horizon", locA && locB)
      .kv.emplace_back("depth", std::to_string(std::min(ga.depth, gb.depth)));
  r.add(pre + "descent_witnesses_are_T_shifts", shifts_ok);

  bool inj = true;
  for (long N = 1; N <= prec; ++N)
    inj = inj &&
          cech_sequence_check(tr, RingElement::monomial(Z, Rat(1)), N, p)
              .injectivity_failure;
  r.add(pre + "cech_injectivity_fails_to_precision", inj)
      .kv.emplace_back("precision", std::to_string(prec));

  StrictnessResult st = strictness_check(tr, 4, p);
  r.add(pre + "strictness_fails_at_Z",
        st.verdict == StrictnessResult::Verdict::Fails &&
            !st.witnesses.empty() && st.witnesses.front() == Z);

  if (id == ExampleId::Ex42) {
    GalleryRing g41 = build_example(ExampleId::Ex41);
    const auto* e41 = dynamic_cast<const ExpressionGauge*>(g41.ring.gauge.get());
    const auto* e42 = dynamic_cast<const ExpressionGauge*>(g.ring.gauge.get());
    bool agree = e41 && e42;
    if (agree)
      for (const auto& e : monomial_window(g41.ring.table, 4)) {
        ExponentVector f(tb);
        for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i];
        auto v1 = e41->value_at(e);
        auto v2 = e42->value_at(f);
        agree = agree && v1.has_value() == v2.has_value() &&
                (!v1 || *v1 == *v2);
      }
    r.add(pre + "agrees_with_ex41_on_integer_window", agree);

    // p-divisible exponents, denominators up to p^3
    bool frac = true;
    for (long num = 1; frac && num <= 8; ++num) {
      Rat x = Rat(num) / Rat(8);
      ExponentVector tf = unit(tb, "T", x);
      GaugeVerdict gv = g.ring.gauge->eval(tf, p);
      frac = gv.is_exact() && gv.exact_value() == x;
      auto tz = tf + Z;
      if (frac && tz) {
        GaugeVerdict gz = g.ring.gauge->eval(*tz, p);
        frac = gz.is_exact() && gz.exact_value() == -x;
      }
    }
    // and the half-integer shift stays outside R0 at the expected depth
    ExponentVector thz = unit(tb, "T", Rat(1) / Rat(2));
    auto thz2 = thz + Z;
    frac = frac && thz2 &&
           membership(RingElement::monomial(*thz2, Rat(1) / Rat(prime)),
                      *g.ring.gauge, Rat(0), p) == Tri::No &&
           membership(RingElement::monomial(*thz2, Rat(1)), *g.ring.gauge,
                      Rat(0), p) == Tri::Yes;
    r.add(pre + "fractional_exponents_to_depth_p3", frac);
  }
  return r;
}

Report suite_43(long horizon) {
  Report r;
  GalleryRing g = build_example(ExampleId::Ex43);
  long K = g.params.depth;
  if (horizon > 0 && horizon < K) K = horizon;
  SequencePair s = build_sequences(g.params.depth);

  // each entry is minimal for its strict recursion inequality
  bool minimal = s.a[0] == 1;
  auto maxup = [](long m, long v) { return std::max(m, v); };
  for (long J = 1; J <= g.params.depth; ++J) {
    long m = 0;
    for (long j = 0; j + 1 < J; ++j) m = maxup(m, s.b[static_cast<std::size_t>(j)]);
    for (long i = 0; i < J; ++i) m = maxup(m, s.a[static_cast<std::size_t>(i)]);
    long bj = s.b[static_cast<std::size_t>(J - 1)];
    minimal = minimal && bj > J * J + J * m && bj - 1 <= J * J + J * m;
    if (J < g.params.depth) {
      long I = J + 1;
      long m2 = 0;
      for (long j = 0; j < J; ++j) m2 = maxup(m2, s.b[static_cast<std::size_t>(j)]);
      for (long i = 0; i < I - 1; ++i) m2 = maxup(m2, s.a[static_cast<std::size_t>(i)]);
      long ai = s.a[static_cast<std::size_t>(I - 1)];
      minimal = minimal && ai > I * I + I * m2 && ai - 1 <= I * I + I * m2;
    }
  }
  r.add("43.sequences_minimal", minimal);
  r.add("43.sequences_frozen",
        g.params.depth == 3 && s.a == std::vector<long>{1, 11, 91} &&
            s.b == std::vector<long>{3, 27, 283});

  const auto& tb = g.ring.table;
  const Int& prime = tb->prime();
  ExponentVector Z = unit(tb, "Z");
  long shift_limit = s.b[static_cast<std::size_t>(g.params.depth - 1)] + 2;
  EvalParams p{K, shift_limit, 0};

  LocalizationTriple tr = build_triple(g.ring, g.t);
  GaugeVerdict ga = tr.gaugeA->eval(Z, p);
  GaugeVerdict gb = tr.gaugeB->eval(Z, p);
  r.add("43.Z_locally_zero_to_depth",
        ga.status == GaugeVerdict::Status::MinusInfCertified && ga.depth >= K &&
            gb.status == GaugeVerdict::Status::MinusInfCertified && gb.depth >= K)
      .kv.emplace_back("depth", std::to_string(std::min(ga.depth, gb.depth)));

  // quadratic floor: gauge(Z^e) >= -e^2, so p^{-(e^2+1)} Z^e stays outside R0
  EvalParams pd{8, 0, 0};
  bool floor_ok = true, outside_ok = true;
  for (long e = 1; e <= 4; ++e) {
    ExponentVector ze = unit(tb, "Z", Rat(e));
    GaugeVerdict gv = g.ring.gauge->eval(ze, pd);
    floor_ok = floor_ok && gv.lower >= XRat(Rat(-e * e));
    outside_ok = outside_ok &&
                 membership(RingElement::monomial(ze, ppow(prime, -(e * e + 1))),
                            *g.ring.gauge, Rat(0), pd) == Tri::No;
  }
  r.add("43.gauge_Ze_above_minus_e_squared", floor_ok);
  r.add("43.scaled_Ze_outside_R0", outside_ok);

  const auto* gg = dynamic_cast<const GeneratorGauge*>(g.ring.gauge.get());
  bool dp_matches = gg != nullptr;
  long instances = 0;
  for (long t = -3; dp_matches && t <= 3; ++t)
    for (long z = 0; z <= 1; ++z) {
      ExponentVector e(tb);
      e[0] = Rat(t);
      e[1] = Rat(z);
      XRat oracle = generator_gauge_oracle(*gg, e, 8);
      GaugeVerdict dp = gg->eval(e, pd);
      if (oracle.finite())
        dp_matches = dp_matches && dp.is_exact() && XRat(dp.exact_value()) == oracle;
      ++instances;
    }
  r.add("43.dp_matches_oracle", dp_matches)
      .kv.emplace_back("instances", std::to_string(instances));
  return r;
}

Report suite_44(long horizon, long precision) {
  Report r;
  long h = horizon > 0 ? std::min(horizon, static_cast<long>(8)) : 8;
  long prec = precision > 0 ? std::min(precision, static_cast<long>(8)) : 8;
  GalleryParams wide;
  wide.zvars = 8;
  GalleryRing g8 = build_example(ExampleId::Ex44, wide);
  EvalParams p{h, h, 0};
  const auto& tb = g8.ring.table;

  LocalizationTriple tr8 = build_triple(g8.ring, g8.t);
  bool exact_ok = true, base_ok = true, grows = true;
  Rat prev = 0;
  for (long n = 1; n <= 8; ++n) {
    ExponentVector zn = unit(tb, "Z" + std::to_string(n));
    GaugeVerdict gs = tr8.gaugeS->eval(zn, p);
    GaugeVerdict gr = g8.ring.gauge->eval(zn, p);
    exact_ok = exact_ok && gs.is_exact() && gs.exact_value() == Rat(-n);
    base_ok = base_ok && gr.is_exact() && gr.exact_value() == Rat(0);
    Rat gap = (gr.is_exact() && gs.is_exact()) ? gr.exact_value() - gs.exact_value()
                                               : Rat(0);
    grows = grows && gap > prev;
    prev = gap;
  }
  r.add("44.S0_gauge_at_Zn_exact_minus_n", exact_ok);
  r.add("44.base_gauge_at_Zn_zero", base_ok);
  // strict failure witness: base - S along the variable family is unbounded
  r.add("44.strictness_fails_along_Zn_family", grows && exact_ok && base_ok);

  GalleryRing g3 = build_example(ExampleId::Ex44);
  LocalizationTriple tr3 = build_triple(g3.ring, g3.t);
  r.add("44.no_locally_zero_sections",
        locally_zero_sections(tr3, 6, p).empty());

  SeriesSpec spec{[&](long n) {
    if (n > g8.params.zvars) return RingElement::zero(tb);
    return RingElement::monomial(unit(tb, "Z" + std::to_string(n)), Rat(1));
  }};
  SeparatingFunctional rho{[&](long n) {
    return unit(tb, "Z" + std::to_string(std::min(n, g8.params.zvars)));
  }};
  bool obstructed = true;
  for (long M = 1; M <= prec; ++M) {
    GlueingCertificate c = glueing_obstruction(tr8, spec, spec, rho, M, p);
    obstructed = obstructed && c.obstruction && c.truncations_agree;
  }
  GlueingCertificate c0 = glueing_obstruction(tr8, spec, spec, rho, 0, p);
  r.add("44.glueing_obstruction_to_precision", obstructed && !c0.obstruction)
      .kv.emplace_back("precision", std::to_string(prec));
  return r;
}

Report suite_45(long horizon) {
  Report r;
  GalleryRing g = build_example(ExampleId::Ex45);
  long h = horizon > 0 ? std::min(horizon, static_cast<long>(12)) : 12;
  EvalParams p{h, 0, 0};
  const auto& tb = g.ring.table;
  const Int& prime = tb->prime();
  ExponentVector Z = unit(tb, "Z");

  UniformityResult u = uniformity(g.ring, 6, p);
  r.add("45.base_ring_uniform",
        u.verdict == UniformityResult::Verdict::Uniform && u.n == 0);

  auto gaugeA = std::make_shared<DerivedGauge>(
      g.ring.gauge,
      std::vector<DerivedGauge::Adjunction>{{g.t, AdjoinDir::NonNeg}});
  TateRingDesc A = TateRingDesc::make("ex45_A", tb, gaugeA);
  UniformityResult uA = uniformity(A, 3, p);
  r.add("45.A_topology_non_uniform_at_Z",
        uA.verdict == UniformityResult::Verdict::NonUniform && uA.witness &&
            *uA.witness == Z);

  bool identity = true;
  for (long n = 1; n <= 5; ++n) {
    RingElement x = RingElement::monomial(unit(tb, "Z", Rat(n + 1)),
                                          ppow(prime, -n * (n + 1)));
    identity = identity && membership(x, *gaugeA, Rat(0), p) == Tri::Yes;
  }
  r.add("45.scaled_Z_powers_land_in_A0", identity);

  StrictnessResult st = strictness_check(build_triple(g.ring, g.t), 6, p);
  r.add("45.strictness_holds",
        st.verdict == StrictnessResult::Verdict::Holds && st.n == 0);
  return r;
}

Report suite_46(long horizon) {
  Report r;
  GalleryRing g = build_example(ExampleId::Ex46);
  long h = horizon > 0 ? std::min(horizon, static_cast<long>(10)) : 10;
  EvalParams p{h, 2 * h + 2, 0};
  const auto& tb = g.ring.table;
  const Int& prime = tb->prime();
  const auto* base = dynamic_cast<const ExpressionGauge*>(g.ring.gauge.get());
  ExponentVector Z = unit(tb, "Z");

  UniformityResult u = uniformity(g.ring, 5, p);
  r.add("46.base_ring_uniform",
        u.verdict == UniformityResult::Verdict::Uniform && u.n == 0);

  TateRingDesc W = localization_base(g);
  LocalizationTriple tr = build_triple(W, g.t);
  GaugeVerdict ga = tr.gaugeA->eval(Z, p);
  GaugeVerdict gb = tr.gaugeB->eval(Z, p);
  r.add("46.Z_locally_zero_over_W",
        ga.status == GaugeVerdict::Status::MinusInfCertified && ga.depth >= h &&
            gb.status == GaugeVerdict::Status::MinusInfCertified && gb.depth >= h)
      .kv.emplace_back("depth", std::to_string(std::min(ga.depth, gb.depth)));

  // the Q^{2n} T^n (resp. P^{2n} T^{-n}) shifts realize the descent
  bool witness_ok = base != nullptr;
  for (long n = 1; witness_ok && n <= h; ++n) {
    ExponentVector wa = Z - unit(tb, "Q", Rat(2 * n)) - unit(tb, "T", Rat(n));
    ExponentVector wb = Z - unit(tb, "P", Rat(2 * n)) - unit(tb, "T", Rat(-n));
    auto va = base->value_at(wa);
    auto vb = base->value_at(wb);
    witness_ok = va && *va == Rat(-n) && vb && *vb == Rat(-n);
  }
  r.add("46.descent_witness_shifts_verified", witness_ok);

  GaugeVerdict gw = W.gauge->eval(Z, p);
  r.add("46.gaugeW_at_Z_exact_zero", gw.is_exact() && gw.exact_value() == Rat(0));
  r.add("46.pinvZ_outside_W0",
        membership(RingElement::monomial(Z, Rat(1) / Rat(prime)), *W.gauge,
                   Rat(0), p) == Tri::No);
  return r;
}

Report suite_flat(long horizon) {
  Report r;
  GalleryRing g = build_example(ExampleId::FlatLaurent);
  long h = horizon > 0 ? horizon : 12;
  EvalParams p{h, 0, 0};
  UniformityResult u = uniformity(g.ring, 4, p);
  r.add("flat.uniform", u.verdict == UniformityResult::Verdict::Uniform && u.n == 0);
  LocalizationTriple tr = build_triple(g.ring, g.t);
  StrictnessResult st = strictness_check(tr, 4, p);
  r.add("flat.strictness_holds",
        st.verdict == StrictnessResult::Verdict::Holds && st.n == 0);
  r.add("flat.no_locally_zero_sections", locally_zero_sections(tr, 4, p).empty());
  return r;
}

}  // namespace

Report verify_proposition(ExampleId id, long horizon, long precision) {
  switch (id) {
    case ExampleId::Ex41:
    case ExampleId::Ex42: return suite_4142(id, horizon, precision);
    case ExampleId::Ex43: return suite_43(horizon);
    case ExampleId::Ex44: return suite_44(horizon, precision);
    case ExampleId::Ex45: return suite_45(horizon);
    case ExampleId::Ex46: return suite_46(horizon);
    case ExampleId::FlatLaurent: return suite_flat(horizon);
  }
  throw std::logic_error("verify_proposition: bad id");
}

Report verify_positive_criteria(long horizon) {
  Report r;
  long h = horizon > 0 ? horizon : 12;
  EvalParams p{h, 0, 0};

  // ---- explicit power-boundedness certificates ----
  {
    GalleryRing flat = build_example(ExampleId::FlatLaurent);
    const auto& tb = flat.ring.table;
    RingElement one = RingElement::one(tb);
    RingElement T = RingElement::monomial(flat.t, Rat(1));
    RingElement zero = RingElement::zero(tb);
    RingElement rr = one + RingElement::monomial(flat.t, Rat(tb->prime()));
    AlainRelation rel0{0, 0, {{rr, {0, 0}}}};
    AlainRelation rel1{1, 0, {{rr, {0, 0}}}};
    AlainCertificate c =
        alain_bound(flat.ring, {one, T}, {one, zero}, rr, {rel0, rel1}, p);
    r.add("positive.alain_flat_trivial_partition", c.valid && c.exponent == 0);
  }
  {
    GalleryRing g = build_example(ExampleId::Ex45);
    const auto& tb = g.ring.table;
    const Int& prime = tb->prime();
    RingElement one = RingElement::one(tb);
    RingElement T = RingElement::monomial(g.t, Rat(1));
    RingElement zero = RingElement::zero(tb);
    // r = p T^{-1} Z, with T r = p Z of relation degree 1
    ExponentVector tz = unit(tb, "T", Rat(-1));
    tz[tb->index_of("Z")] = Rat(1);
    RingElement rr = RingElement::monomial(tz, Rat(prime));
    RingElement pz = RingElement::monomial(unit(tb, "Z"), Rat(prime));
    AlainRelation rel0{0, 0, {{rr, {0, 0}}}};
    AlainRelation rel1{1, 1, {{pz, {1, 0}}}};
    AlainCertificate c =
        alain_bound(g.ring, {one, T}, {one, zero}, rr, {rel0, rel1}, p);
    r.add("positive.alain_wedge_degree_one",
          c.valid && c.N == 1 && c.A == 1 && c.B == 0 && c.exponent == 1);
  }
  {
    GalleryRing g = build_example(ExampleId::Ex41);
    const auto& tb = g.ring.table;
    const Int& prime = tb->prime();
    RingElement one = RingElement::one(tb);
    RingElement T = RingElement::monomial(g.t, Rat(1));
    RingElement zero = RingElement::zero(tb);
    RingElement rr = RingElement::monomial(unit(tb, "T"), Rat(prime)) +
                     RingElement::monomial(unit(tb, "T", Rat(-1)), Rat(prime));
    AlainRelation rel0{0, 0, {{rr, {0, 0}}}};
    AlainRelation rel1{1, 0, {{rr, {0, 0}}}};
    AlainCertificate c =
        alain_bound(g.ring, {one, T}, {one, zero}, rr, {rel0, rel1}, p);
    r.add("positive.alain_laurent_symmetric", c.valid && c.exponent == 0);
  }

  // ---- Laurent-cover scaling constants ----
  {
    GalleryRing flat = build_example(ExampleId::FlatLaurent);
    const auto& tb = flat.ring.table;
    const Int& prime = tb->prime();
    RingElement one = RingElement::one(tb);
    RingElement T = RingElement::monomial(flat.t, Rat(1));
    RingElement zero = RingElement::zero(tb);
    LaurentConstant lc = laurent_constant(flat.ring, {one, T}, {one, zero}, p);
    r.add("positive.laurent_constant_trivial",
          lc.found == Tri::Yes && lc.B == 0 && lc.c_exponent == -1);

    RingElement p2 = one.scaled(Rat(prime * prime));
    RingElement p2inv = one.scaled(Rat(1) / Rat(prime * prime));
    LaurentConstant ls = laurent_constant(flat.ring, {p2, T}, {p2inv, zero}, p);
    r.add("positive.laurent_constant_scaled",
          ls.found == Tri::Yes && ls.B == 2 && ls.c_exponent == -3);

    GalleryRing g41 = build_example(ExampleId::Ex41);
    RingElement one41 = RingElement::one(g41.ring.table);
    RingElement T41 = RingElement::monomial(g41.t, Rat(1));
    LaurentConstant l41 = laurent_constant(
        g41.ring, {one41, T41}, {one41, RingElement::zero(g41.ring.table)}, p);
    r.add("positive.laurent_constant_ex41",
          l41.found == Tri::Yes && l41.B == 0 && l41.c_exponent == -1);
  }

  // ---- uniform rings are strict on the same window ----
  {
    bool coherent = true;
    long uniform_count = 0, checked = 0;
    for (ExampleId id : {ExampleId::Ex41, ExampleId::Ex42, ExampleId::Ex44,
                         ExampleId::Ex45, ExampleId::Ex46, ExampleId::FlatLaurent}) {
      GalleryRing g = build_example(id);
      EvalParams q{10, 0, 0};
      UniformityResult u = uniformity(g.ring, 4, q);
      ++checked;
      if (u.verdict != UniformityResult::Verdict::Uniform) continue;
      ++uniform_count;
      StrictnessResult st = strictness_check(build_triple(g.ring, g.t), 4, q);
      coherent = coherent && st.verdict == StrictnessResult::Verdict::Holds;
    }
    auto& line = r.add("positive.uniform_implies_strict", coherent && uniform_count >= 3);
    line.kv.emplace_back("rings_checked", std::to_string(checked));
    line.kv.emplace_back("uniform", std::to_string(uniform_count));
  }
  return r;
}

}  // namespace tate
