#include "tate/topology.hpp"

#include <algorithm>
#include <functional>

namespace tate {

std::vector<ExponentVector> monomial_window(const VarTablePtr& table, long window) {
  std::vector<ExponentVector> out;
  std::size_t dims = table->size();
  std::vector<long> lo(dims), hi(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    const auto& d = table->decl(i);
    lo[i] = d.invertible ? -window : 0;
    hi[i] = window;
    if (d.nilpotency_cap) hi[i] = std::min(hi[i], *d.nilpotency_cap - 1);
  }
  ExponentVector e(table);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == dims) {
      out.push_back(e);
      return;
    }
    for (long v = lo[k]; v <= hi[k]; ++v) {
      e[k] = Rat(v);
      rec(k + 1);
    }
  };
  rec(0);
  // scan small monomials first so witness searches return minimal ones
  std::stable_sort(out.begin(), out.end(),
                   [](const ExponentVector& a, const ExponentVector& b) {
                     Rat na = 0, nb = 0;
                     for (std::size_t i = 0; i < a.size(); ++i) {
                       na += a[i] < 0 ? -a[i] : a[i];
                       nb += b[i] < 0 ? -b[i] : b[i];
                     }
                     if (na != nb) return na < nb;
                     return a < b;
                   });
  return out;
}

std::vector<std::string> construction_spot_checks(const TateRingDesc& ring,
                                                  long window,
                                                  const EvalParams& p) {
  std::vector<std::string> bad;
  ExponentVector unit(ring.table);
  GaugeVerdict g1 = ring.gauge->eval(unit, p);
  if (g1.upper > XRat(0))
    bad.push_back("gauge(1) = " + g1.str() + " not <= 0");

  auto win = monomial_window(ring.table, window);
  std::size_t stride = win.size() > 24 ? win.size() / 24 + 1 : 1;
  for (std::size_t i = 0; i < win.size(); i += stride)
    for (std::size_t j = i; j < win.size(); j += stride) {
      auto sum = win[i] + win[j];
      if (!sum) continue;  // product vanishes, nothing to check
      GaugeVerdict ga = ring.gauge->eval(win[i], p);
      GaugeVerdict gb = ring.gauge->eval(win[j], p);
      GaugeVerdict gs = ring.gauge->eval(*sum, p);
      if (!ga.is_exact() || !gb.is_exact()) continue;
      XRat rhs = ga.lower + gb.lower;
      if (gs.lower > rhs)
        bad.push_back("gauge(" + sum->str() + ") = " + gs.str() + " > gauge(" +
                      win[i].str() + ") + gauge(" + win[j].str() + ") = " +
                      rhs.str());
    }
  return bad;
}

namespace {

bool eventually_vanishes(const ExponentVector& e) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e.table()->decl(i).nilpotency_cap && e[i] > 0) return true;
  return false;
}

// True when the only multiset of term exponents of x averaging to e is
// k copies of e itself: some linear functional among +-coordinates and
// +-(1,...,1) is strictly maximized at e.  Under the canonical grading this
// makes the weight-k*e component of x^k the pure power of the e-term, so
// per-term slope verdicts transfer to x.
bool term_exposed(const RingElement& x, const ExponentVector& e) {
  if (x.terms().size() <= 1) return true;
  std::size_t dims = e.size();
  std::vector<std::vector<Rat>> funcs;
  for (std::size_t i = 0; i < dims; ++i) {
    std::vector<Rat> f(dims, Rat(0));
    f[i] = 1;
    funcs.push_back(f);
    f[i] = -1;
    funcs.push_back(f);
  }
  funcs.push_back(std::vector<Rat>(dims, Rat(1)));
  funcs.push_back(std::vector<Rat>(dims, Rat(-1)));
  auto dot = [&](const std::vector<Rat>& f, const ExponentVector& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < dims; ++i) s += f[i] * v[i];
    return s;
  };
  for (const auto& f : funcs) {
    bool strict = true;
    Rat fe = dot(f, e);
    for (const auto& [g, c] : x.terms())
      if (!(g == e) && dot(f, g) >= fe) strict = false;
    if (strict) return true;
  }
  return false;
}

// No-certificate from exact slope analysis of a single exposed term.
// The k-th power of c x^e sits in pi^{-N} R0 iff the margin
// k v(c) - gauge(k e) is >= -N, so boundedness is decided by the sign of
// v(c) - slope (and a superlinear gauge ascent is always unbounded).
std::optional<BoundednessWitness> slope_violation(const RingElement& x,
                                                  const TateRingDesc& ring,
                                                  const EvalParams& p,
                                                  bool strict_positive_needed) {
  const Int& prime = ring.table->prime();
  for (const auto& [e, c] : x.terms()) {
    if (eventually_vanishes(e)) continue;
    if (!term_exposed(x, e)) continue;
    SlopeVerdict sv = asymptotic_slope(*ring.gauge, e, p);
    if (sv.kind == SlopeVerdict::Kind::PlusInfRate) {
      BoundednessWitness w;
      w.kind = BoundednessWitness::Kind::SlopeViolation;
      w.term = e;
      return w;
    }
    if (sv.kind != SlopeVerdict::Kind::ExactSlope) continue;
    XRat v = padic_valuation(c, prime);
    if (!v.finite()) continue;
    Rat total = v.value() - sv.slope;
    bool bad = strict_positive_needed ? total <= 0 : total < 0;
    if (bad) {
      BoundednessWitness w;
      w.kind = BoundednessWitness::Kind::SlopeViolation;
      w.term = e;
      w.total_slope = total;
      return w;
    }
  }
  return std::nullopt;
}

// Least n >= 0 with x in pi^{-n} A0, searched up to bound.
std::optional<long> containment_level(const RingElement& x, const TateRingDesc& ring,
                                      const EvalParams& p, long bound) {
  for (long n = 0; n <= bound; ++n)
    if (membership(x, *ring.gauge, Rat(-n), p) == Tri::Yes) return n;
  return std::nullopt;
}

}  // namespace

BoundednessResult power_bounded(const RingElement& x, const TateRingDesc& ring,
                                const EvalParams& p) {
  BoundednessResult r;
  if (x.is_zero()) {
    r.verdict = Tri::Yes;
    r.witness.kind = BoundednessWitness::Kind::Family;
    return r;
  }
  if (auto w = slope_violation(x, ring, p, false)) {
    r.verdict = Tri::No;
    r.witness = *w;
    return r;
  }

  RingElement pow = x;
  for (long s = 1; s <= p.horizon; ++s) {
    if (pow.is_zero()) {
      r.verdict = Tri::Yes;
      r.witness.kind = BoundednessWitness::Kind::NilpotentPower;
      r.witness.power = s;
      return r;
    }
    if (membership(pow, *ring.gauge, Rat(0), p) == Tri::Yes) {
      // x^s in A0, so x^{ks+j} in x^j A0; bound the s-1 cosets.
      long N = 0;
      bool ok = true;
      RingElement q = RingElement::one(x.table());
      for (long j = 1; j < s && ok; ++j) {
        q = q * x;
        auto n = containment_level(q, ring, p, 4 * p.horizon + 8);
        if (!n)
          ok = false;
        else
          N = std::max(N, *n);
      }
      if (ok) {
        r.verdict = Tri::Yes;
        r.witness.kind = BoundednessWitness::Kind::Family;
        r.witness.power = s;
        r.witness.n = N;
        return r;
      }
    }
    pow = pow * x;
  }
  return r;
}

BoundednessResult topologically_nilpotent(const RingElement& x,
                                          const TateRingDesc& ring,
                                          const EvalParams& p) {
  BoundednessResult r;
  if (x.is_zero()) {
    r.verdict = Tri::Yes;
    r.witness.kind = BoundednessWitness::Kind::NilpotentPower;
    r.witness.power = 1;
    return r;
  }
  if (auto w = slope_violation(x, ring, p, true)) {
    r.verdict = Tri::No;
    r.witness = *w;
    return r;
  }
  BoundednessResult pb = power_bounded(x, ring, p);
  if (pb.verdict == Tri::No) return pb;

  RingElement pow = x;
  for (long s = 1; s <= p.horizon; ++s) {
    if (pow.is_zero()) {
      r.verdict = Tri::Yes;
      r.witness.kind = BoundednessWitness::Kind::NilpotentPower;
      r.witness.power = s;
      return r;
    }
    if (pb.verdict == Tri::Yes &&
        membership(pow, *ring.gauge, Rat(1), p) == Tri::Yes) {
      // x^s in pi A0 and powers bounded by pi^{-n}: x^{ks+j} in pi^{k-n} A0.
      r.verdict = Tri::Yes;
      r.witness.kind = BoundednessWitness::Kind::Family;
      r.witness.power = s;
      r.witness.n = pb.witness.n;
      return r;
    }
    pow = pow * x;
  }
  return r;
}

UniformityResult uniformity(const TateRingDesc& ring, long window,
                            const EvalParams& p) {
  UniformityResult out;
  const Int& prime = ring.table->prime();
  Rat worst = 0, worst_half = 0;
  std::optional<ExponentVector> worst_at;
  bool gaps = false;
  auto l1 = [](const ExponentVector& e) {
    Rat s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] < Rat(0) ? -e[i] : e[i];
    return s;
  };
  auto record = [&](const ExponentVector& e, const Rat& need, long window_) {
    if (need > worst) {
      worst = need;
      worst_at = e;
    }
    if (l1(e) * Rat(2) <= Rat(window_) && need > worst_half) worst_half = need;
  };

  for (const auto& e : monomial_window(ring.table, window)) {
    GaugeVerdict gv = ring.gauge->eval(e, p);
    if (gv.status == GaugeVerdict::Status::PlusInf) continue;
    bool gauge_finite = gv.is_exact() || (gv.upper.finite() && gv.lower.finite());
    if (!gv.upper.finite()) {
      gaps = true;
      continue;
    }

    if (eventually_vanishes(e)) {
      // nilpotent monomial: k x^e is power-bounded for every k
      if (gauge_finite) {
        out.verdict = UniformityResult::Verdict::NonUniform;
        out.witness = e;
        out.witness_gauge = gv.upper.finite() ? std::optional<Rat>(gv.upper.value())
                                              : std::nullopt;
        out.detail = "nilpotent monomial line";
        return out;
      }
      gaps = true;
      continue;
    }

    SlopeVerdict sv = asymptotic_slope(*ring.gauge, e, p);
    if (sv.kind == SlopeVerdict::Kind::MinusInfRate) {
      if (gauge_finite) {
        out.verdict = UniformityResult::Verdict::NonUniform;
        out.witness = e;
        out.witness_gauge = gv.upper.value();
        out.detail = "superlinear gauge descent along " + e.str();
        return out;
      }
      gaps = true;
    } else if (sv.kind == SlopeVerdict::Kind::ExactSlope) {
      if (!gv.is_exact()) {
        gaps = true;
        continue;
      }
      // least integer coefficient valuation keeping the line bounded:
      // v - slope >= 0
      Rat vmin = Rat(rat_ceil(sv.slope));
      record(e, gv.exact_value() - vmin, window);
    } else if (sv.kind == SlopeVerdict::Kind::PlusInfRate ||
               sv.kind == SlopeVerdict::Kind::Unsupported) {
      // unbounded (or escaping the ring) for every coefficient
      continue;
    } else {
      // no closed form: probe coefficient valuations down to -horizon.
      // The inner search needs headroom: pi^{-c} x^e may only re-enter A0
      // at power c + 1.
      EvalParams q = p;
      q.horizon = 2 * p.horizon + 2;
      std::optional<long> vmin;
      bool line = false;
      for (long v = -p.horizon; v <= p.horizon; ++v) {
        Int pw = boost::multiprecision::pow(prime, static_cast<unsigned>(v < 0 ? -v : v));
        RingElement m = RingElement::monomial(e, v < 0 ? Rat(1) / Rat(pw) : Rat(pw));
        BoundednessResult b = power_bounded(m, ring, q);
        if (b.verdict == Tri::Yes) {
          vmin = v;
          if (v == -p.horizon) line = true;
          break;
        }
      }
      if (line && gauge_finite) {
        out.verdict = UniformityResult::Verdict::NonUniform;
        out.witness = e;
        out.witness_gauge = gv.upper.value();
        out.detail = "bounded for every sampled coefficient valuation (depth " +
                     std::to_string(p.horizon) + ")";
        return out;
      }
      if (!vmin || !gv.is_exact()) {
        gaps = true;
        continue;
      }
      record(e, gv.exact_value() - Rat(*vmin), window);
    }
  }

  if (window >= 2 && worst > worst_half && worst_at) {
    out.verdict = UniformityResult::Verdict::NonUniform;
    out.witness = *worst_at;
    out.detail = "uniformity bound grows with the window";
    return out;
  }
  if (gaps) {
    out.verdict = UniformityResult::Verdict::Inconclusive;
    out.detail = "window contains monomials without exact certificates";
    return out;
  }
  out.verdict = UniformityResult::Verdict::Uniform;
  Int n = rat_ceil(worst);
  out.n = n < 0 ? 0 : static_cast<long>(n);
  return out;
}

}  // namespace tate
