#include "tate/cech.hpp"

#include <algorithm>
#include <stdexcept>

namespace tate {

namespace {

bool vanishing_power(const ExponentVector& e, long horizon, long* power) {
  // least s with s * e_i >= cap for some capped coordinate
  std::optional<long> best;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& d = e.table()->decl(i);
    if (!d.nilpotency_cap || e[i] <= 0) continue;
    Rat s = Rat(*d.nilpotency_cap) / e[i];
    long k = static_cast<long>(rat_ceil(s));
    if (!best || k < *best) best = k;
  }
  if (!best || *best > horizon) return false;
  if (power) *power = *best;
  return true;
}

}  // namespace

LocalizationTriple build_triple(const TateRingDesc& ring, const ExponentVector& t) {
  require_same_table(ring.table, t.table());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) continue;
    if (!ring.table->decl(i).invertible)
      throw std::invalid_argument("build_triple: localization parameter " +
                                  t.str() + " is not an invertible monomial");
    if (boost::multiprecision::denominator(t[i]) != 1)
      throw std::invalid_argument("build_triple: non-integer localization exponent");
  }
  LocalizationTriple tr{ring, t, nullptr, nullptr, nullptr, nullptr};
  tr.gaugeA = std::make_shared<DerivedGauge>(
      ring.gauge, std::vector<DerivedGauge::Adjunction>{{t, AdjoinDir::NonNeg}});
  tr.gaugeB = std::make_shared<DerivedGauge>(
      ring.gauge, std::vector<DerivedGauge::Adjunction>{{t, AdjoinDir::NonPos}});
  tr.gaugeC = std::make_shared<DerivedGauge>(
      ring.gauge, std::vector<DerivedGauge::Adjunction>{{t, AdjoinDir::Both}});
  tr.gaugeS = gauge_intersection(tr.gaugeA, tr.gaugeB);
  return tr;
}

std::vector<std::string> triple_spot_checks(const LocalizationTriple& triple,
                                            long window, const EvalParams& p) {
  std::vector<std::string> bad;
  auto leq = [&](const char* an, const GaugeVerdict& a, const char* bn,
                 const GaugeVerdict& b, const ExponentVector& e) {
    // only decidable comparisons: certified upper of b below certified lower of a
    if (b.upper < a.lower)
      bad.push_back(std::string(an) + "(" + e.str() + ") = " + a.str() +
                    " not <= " + bn + " = " + b.str());
  };
  for (const auto& e : monomial_window(triple.base.table, window)) {
    GaugeVerdict gr = triple.base.gauge->eval(e, p);
    GaugeVerdict ga = triple.gaugeA->eval(e, p);
    GaugeVerdict gb = triple.gaugeB->eval(e, p);
    GaugeVerdict gc = triple.gaugeC->eval(e, p);
    GaugeVerdict gs = triple.gaugeS->eval(e, p);
    leq("C", gc, "A", ga, e);
    leq("C", gc, "B", gb, e);
    leq("A", ga, "S", gs, e);
    leq("B", gb, "S", gs, e);
    leq("A", ga, "base", gr, e);
    leq("B", gb, "base", gr, e);
    leq("S", gs, "base", gr, e);
  }
  return bad;
}

StrictnessResult strictness_check(const LocalizationTriple& triple, long window,
                                  const EvalParams& p) {
  StrictnessResult out;
  long half = window / 2;
  Rat worst = 0, worst_half = 0;
  bool any_gap = false;
  bool gaps_unresolved = false;
  std::vector<std::pair<Rat, ExponentVector>> gap_list;

  for (const auto& e : monomial_window(triple.base.table, window)) {
    GaugeVerdict gr = triple.base.gauge->eval(e, p);
    GaugeVerdict gs = triple.gaugeS->eval(e, p);
    if (gr.status == GaugeVerdict::Status::PlusInf) {
      if (gs.upper.finite()) {
        out.verdict = StrictnessResult::Verdict::Fails;
        out.witnesses = {e};
        out.detail = "monomial in S0 but outside the ring";
        return out;
      }
      continue;
    }
    if (gs.status == GaugeVerdict::Status::MinusInfCertified && gr.upper.finite()) {
      out.verdict = StrictnessResult::Verdict::Fails;
      out.witnesses = {e};
      for (const auto& w : gs.witnesses) out.witnesses.push_back(w);
      out.detail = "gauge over S0 descends below -" + std::to_string(gs.depth) +
                   " while base gauge stays finite";
      return out;
    }
    if (gs.status == GaugeVerdict::Status::PlusInf) continue;
    if (!gr.is_exact() || !gs.is_exact()) {
      gaps_unresolved = true;
      continue;
    }
    Rat gap = gr.exact_value() - gs.exact_value();
    if (gap <= 0) continue;
    any_gap = true;
    gap_list.emplace_back(gap, e);
    if (gap > worst) worst = gap;
    bool in_half = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > half || e[i] < -half) in_half = false;
    if (in_half && gap > worst_half) worst_half = gap;
  }

  if (any_gap && worst > worst_half) {
    out.verdict = StrictnessResult::Verdict::Fails;
    for (const auto& [gap, e] : gap_list)
      if (gap > worst_half) out.witnesses.push_back(e);
    out.detail = "sup of base - S grows from " + worst_half.str() + " to " +
                 worst.str() + " when the window doubles";
    return out;
  }
  if (gaps_unresolved) {
    out.verdict = StrictnessResult::Verdict::Inconclusive;
    out.detail = "window contains monomials without exact verdicts";
    return out;
  }
  out.verdict = StrictnessResult::Verdict::Holds;
  out.n = worst;
  return out;
}

std::vector<LocallyZeroSection> locally_zero_sections(
    const LocalizationTriple& triple, long window, const EvalParams& p) {
  std::vector<LocallyZeroSection> out;
  for (const auto& e : monomial_window(triple.base.table, window)) {
    if (e.is_zero()) continue;
    GaugeVerdict gr = triple.base.gauge->eval(e, p);
    if (!gr.is_exact()) continue;
    GaugeVerdict ga = triple.gaugeA->eval(e, p);
    GaugeVerdict gb = triple.gaugeB->eval(e, p);
    if (ga.status != GaugeVerdict::Status::MinusInfCertified ||
        gb.status != GaugeVerdict::Status::MinusInfCertified)
      continue;
    LocallyZeroSection s{e};
    s.base_gauge = gr.exact_value();
    s.certified_depth = std::min(ga.depth, gb.depth);
    long pw = 0;
    s.nilpotent = vanishing_power(e, p.horizon, &pw);
    s.topologically_nilpotent =
        tate::topologically_nilpotent(RingElement::monomial(e, Rat(1)),
                                      triple.base, p)
            .verdict;
    out.push_back(std::move(s));
  }
  return out;
}

TruncatedElement TruncatedElement::truncate(const RingElement& x, GaugePtr gauge,
                                            long precision, const EvalParams& p) {
  RingElement rep(x.table());
  for (const auto& [e, c] : x.terms()) {
    GaugeVerdict g = gauge->eval(e, p);
    XRat v = padic_valuation(c, x.table()->prime());
    if (v >= XRat(Rat(precision)) + g.upper) continue;  // term already in pi^N R0
    rep = rep + RingElement::monomial(e, c);
  }
  return TruncatedElement(std::move(rep), precision, std::move(gauge));
}

Tri TruncatedElement::equivalent(const TruncatedElement& o, const EvalParams& p) const {
  if (precision_ != o.precision_)
    throw std::invalid_argument("TruncatedElement: mismatched precisions");
  return membership(rep_ - o.rep_, *gauge_, Rat(precision_), p);
}

CechSequenceReport cech_sequence_check(const LocalizationTriple& triple,
                                       const RingElement& x, long precision,
                                       const EvalParams& p) {
  CechSequenceReport r;
  r.precision = precision;
  // eps(x) = (x, x), delta(a, b) = b - a; phi is the identity.
  RingElement delta_eps = x - x;
  r.complex_identity = delta_eps.is_zero();
  RingElement delta_split = x - RingElement::zero(x.table());
  r.split_identity = delta_split == x;

  r.x_zero_in_R = membership(x, *triple.base.gauge, Rat(precision), p);
  r.x_zero_in_A_to_horizon =
      membership(x, *triple.gaugeA, Rat(p.horizon), p) == Tri::Yes;
  r.x_zero_in_B_to_horizon =
      membership(x, *triple.gaugeB, Rat(p.horizon), p) == Tri::Yes;
  r.injectivity_failure = r.x_zero_in_R == Tri::No &&
                          r.x_zero_in_A_to_horizon && r.x_zero_in_B_to_horizon;
  return r;
}

GlueingCertificate glueing_obstruction(const LocalizationTriple& triple,
                                       const SeriesSpec& a_spec,
                                       const SeriesSpec& b_spec,
                                       const SeparatingFunctional& functional,
                                       long precision, const EvalParams& p) {
  GlueingCertificate cert;
  cert.precision = precision;
  long cut = std::max(precision, p.horizon) + 1;

  RingElement a = RingElement::zero(triple.base.table);
  RingElement b = RingElement::zero(triple.base.table);
  for (long n = 1; n <= cut; ++n) {
    RingElement ta = a_spec.term(n);
    RingElement tb = b_spec.term(n);
    if (membership(ta, *triple.gaugeA, Rat(std::min(n, p.horizon)), p) != Tri::Yes)
      throw std::invalid_argument(
          "glueing_obstruction: tail guarantee fails on the A side at index " +
          std::to_string(n));
    if (membership(tb, *triple.gaugeB, Rat(std::min(n, p.horizon)), p) != Tri::Yes)
      throw std::invalid_argument(
          "glueing_obstruction: tail guarantee fails on the B side at index " +
          std::to_string(n));
    a = a + ta;
    b = b + tb;
  }

  cert.truncations_agree =
      membership(a - b, *triple.gaugeC, Rat(precision), p) == Tri::Yes;

  bool all_blocked = true;
  for (long n = 1; n <= p.horizon; ++n) {
    ExponentVector m = functional.member(n);
    GaugeVerdict g = triple.base.gauge->eval(m, p);
    if (!g.is_exact()) {
      all_blocked = false;
      cert.detail = "no exact base gauge at " + m.str();
      continue;
    }
    XRat v = padic_valuation(a.coeff(m), triple.base.table->prime());
    if (v < XRat(Rat(precision) + g.exact_value()))
      cert.blocked_indices.push_back(n);
    else
      all_blocked = false;
  }
  cert.obstruction = cert.truncations_agree && all_blocked && p.horizon >= 1;
  if (cert.obstruction)
    cert.detail = "every coefficient functional up to the horizon keeps "
                  "valuation below the precision threshold";
  else if (cert.detail.empty())
    cert.detail = cert.truncations_agree ? "no separation at this precision"
                                         : "truncations disagree";
  return cert;
}

AlainCertificate alain_bound(const TateRingDesc& ring,
                             const std::vector<RingElement>& t_list,
                             const std::vector<RingElement>& a_list,
                             const RingElement& r,
                             const std::vector<AlainRelation>& relations,
                             const EvalParams& p) {
  if (t_list.size() != a_list.size())
    throw std::invalid_argument("alain_bound: t/a length mismatch");
  RingElement unity = RingElement::zero(ring.table);
  for (std::size_t i = 0; i < t_list.size(); ++i)
    unity = unity + a_list[i] * t_list[i];
  if (unity != RingElement::one(ring.table))
    throw std::invalid_argument("alain_bound: sum a_i t_i != 1");

  AlainCertificate cert;
  bool coeffs_certain = true;

  for (const auto& rel : relations) {
    if (rel.i >= t_list.size())
      throw std::invalid_argument("alain_bound: relation index out of range");
    RingElement rhs = RingElement::zero(ring.table);
    for (const auto& term : rel.terms) {
      if (term.degs.size() != t_list.size())
        throw std::invalid_argument("alain_bound: relation term arity mismatch");
      long total = 0;
      for (long d : term.degs) {
        if (d < 0) throw std::invalid_argument("alain_bound: negative degree");
        total += d;
      }
      if (total != rel.d)
        throw std::invalid_argument("alain_bound: relation not homogeneous");
      Tri in_r0 = membership(term.coeff, *ring.gauge, Rat(0), p);
      if (in_r0 == Tri::No)
        throw std::invalid_argument("alain_bound: relation coefficient not in R0");
      if (in_r0 == Tri::Inconclusive) coeffs_certain = false;
      RingElement prod = term.coeff;
      for (std::size_t j = 0; j < t_list.size(); ++j)
        prod = prod * t_list[j].pow(static_cast<unsigned long>(term.degs[j]));
      rhs = rhs + prod;
    }
    RingElement lhs = t_list[rel.i].pow(static_cast<unsigned long>(rel.d)) * r;
    if (lhs != rhs)
      throw std::invalid_argument("alain_bound: relation fails exact check");
    cert.N += rel.d;
  }

  long bound = 4 * p.horizon + 8;
  auto minimal_level = [&](const std::vector<RingElement>& xs) -> std::optional<long> {
    for (long n = 0; n <= bound; ++n) {
      bool all = true;
      for (const auto& x : xs)
        if (membership(x, *ring.gauge, Rat(-n), p) != Tri::Yes) all = false;
      if (all) return n;
    }
    return std::nullopt;
  };
  auto A = minimal_level(t_list);
  auto B = minimal_level(a_list);
  if (!A || !B) {
    cert.detail = "no pi-scaling bringing the t_i / a_i into R0 was found";
    return cert;
  }
  cert.A = *A;
  cert.B = *B;
  cert.exponent = cert.N * (cert.A + cert.B);

  bool all_yes = true, any_no = false;
  RingElement pw = RingElement::one(ring.table);
  for (long m = 1; m <= 8; ++m) {
    pw = pw * r;
    Tri t = membership(pw, *ring.gauge, Rat(-cert.exponent), p);
    if (t == Tri::No) any_no = true;
    if (t != Tri::Yes) all_yes = false;
  }
  cert.powers_ok = any_no ? Tri::No : (all_yes ? Tri::Yes : Tri::Inconclusive);
  cert.valid = coeffs_certain && cert.powers_ok == Tri::Yes;
  if (cert.valid)
    cert.detail = "pi^" + std::to_string(cert.exponent) + " r^m in R0 for m <= 8";
  return cert;
}

LaurentConstant laurent_constant(const TateRingDesc& ring,
                                 const std::vector<RingElement>& t_list,
                                 const std::vector<RingElement>& a_list,
                                 const EvalParams& p) {
  if (t_list.size() != a_list.size())
    throw std::invalid_argument("laurent_constant: t/a length mismatch");
  RingElement unity = RingElement::zero(ring.table);
  for (std::size_t i = 0; i < t_list.size(); ++i)
    unity = unity + a_list[i] * t_list[i];
  if (unity != RingElement::one(ring.table))
    throw std::invalid_argument("laurent_constant: sum a_i t_i != 1");

  LaurentConstant out;
  for (long B = 0; B <= p.horizon; ++B) {
    Int pw = boost::multiprecision::pow(ring.table->prime(),
                                        static_cast<unsigned>(B));
    bool all = true;
    for (const auto& a : a_list) {
      BoundednessResult r = power_bounded(a.scaled(Rat(pw)), ring, p);
      if (r.verdict != Tri::Yes) all = false;
    }
    if (all) {
      out.found = Tri::Yes;
      out.B = B;
      out.c_exponent = -(B + 1);
      return out;
    }
  }
  return out;
}

XRat valuation_sample(const TateRingDesc& ring, const ValuationSample& sample,
                      const RingElement& x) {
  if (sample.pi_value <= 0)
    throw std::invalid_argument("valuation_sample: pi must have positive value");
  XRat best = XRat::plus_inf();
  for (const auto& [e, c] : x.terms()) {
    XRat v = padic_valuation(c, ring.table->prime());
    XRat val = v.finite() ? XRat(v.value() * sample.pi_value) : XRat::plus_inf();
    for (std::size_t i = 0; i < e.size(); ++i) {
      const auto& d = ring.table->decl(i);
      if (d.nilpotency_cap && e[i] > 0) {
        val = XRat::plus_inf();
        break;
      }
      auto it = sample.weights.find(d.name);
      if (it != sample.weights.end() && val.finite())
        val = XRat(val.value() + e[i] * it->second);
    }
    if (val < best) best = val;
  }
  return best;
}

bool cover_membership(const TateRingDesc& ring, const ValuationSample& sample,
                      const ExponentVector& t, CoverPiece piece) {
  if (sample.pi_value <= 0)
    throw std::invalid_argument("cover_membership: pi must have positive value");
  Rat vt = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto it = sample.weights.find(ring.table->decl(i).name);
    if (it != sample.weights.end()) vt += t[i] * it->second;
  }
  return piece == CoverPiece::U ? vt >= 0 : vt <= 0;
}

}  // namespace tate
