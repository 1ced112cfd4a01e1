#include "tate/gauge.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <stdexcept>

namespace tate {

std::string GaugeVerdict::str() const {
  switch (status) {
    case Status::Exact: return "exact(" + lower.str() + ")";
    case Status::AtMost: return "atmost(" + upper.str() + ")";
    case Status::MinusInfCertified:
      return "minusinf(depth=" + std::to_string(depth) + ")";
    case Status::PlusInf: return "plusinf";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string tri_str(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Inconclusive: return "inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// ExpressionGauge
// ---------------------------------------------------------------------------

std::optional<Rat> ExpressionGauge::value_at(const ExponentVector& e) const {
  if (!e.declaration_valid()) return std::nullopt;
  std::vector<Rat> x(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) x[i] = e[i];
  if (!eval_guard(support_, x)) return std::nullopt;
  return eval_point(*value_, x);
}

GaugeVerdict ExpressionGauge::eval(const ExponentVector& e, const EvalParams&) const {
  require_same_table(table_, e.table());
  auto v = value_at(e);
  if (!v) return GaugeVerdict::plus_inf();
  return GaugeVerdict::exact(*v);
}

RayValue ExpressionGauge::ray(const ExponentVector& base,
                              const ExponentVector& dir) const {
  RayValue unsupported;
  unsupported.supported = false;

  std::vector<Rat> b(base.size()), d(dir.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    b[i] = base[i];
    d[i] = dir[i];
    const auto& decl = table_->decl(i);
    if (decl.nilpotency_cap) {
      // cap variables must stay fixed in [0, cap) along the ray
      if (d[i] != 0) return unsupported;
      if (b[i] < 0 || b[i] >= *decl.nilpotency_cap) return unsupported;
    } else if (!decl.invertible) {
      if (d[i] < 0) return unsupported;
      if (d[i] == 0 && b[i] < 0) return unsupported;
    }
    if (!decl.p_divisible &&
        (boost::multiprecision::denominator(b[i]) != 1 ||
         boost::multiprecision::denominator(d[i]) != 1))
      return unsupported;
  }

  long stable = 0;
  if (!eval_guard_ray(support_, b, d, stable)) {
    unsupported.stable_from = stable;
    return unsupported;
  }
  RayValue r = eval_ray(*value_, b, d);
  if (stable > r.stable_from) r.stable_from = stable;
  return r;
}

// ---------------------------------------------------------------------------
// Interval arithmetic over a shift region (lower-bound certification for
// derived gauges)
// ---------------------------------------------------------------------------

namespace {

struct Ival {
  XRat lo = XRat::minus_inf();
  XRat hi = XRat::plus_inf();
  bool empty = false;

  static Ival whole() { return {}; }
  static Ival point(Rat v) { return {XRat(v), XRat(v), false}; }
  static Ival none() { return {XRat(0), XRat(0), true}; }
};

XRat xmul(const XRat& a, const XRat& b) {
  bool za = a.finite() && a.value() == 0;
  bool zb = b.finite() && b.value() == 0;
  if (za || zb) return XRat(0);
  if (a.finite() && b.finite()) return XRat(a.value() * b.value());
  int sa = a.is_plus_inf() ? 1 : (a.is_minus_inf() ? -1 : (a.value() > 0 ? 1 : -1));
  int sb = b.is_plus_inf() ? 1 : (b.is_minus_inf() ? -1 : (b.value() > 0 ? 1 : -1));
  return sa * sb > 0 ? XRat::plus_inf() : XRat::minus_inf();
}

Ival iadd(const Ival& a, const Ival& b) {
  if (a.empty || b.empty) return Ival::none();
  return {a.lo + b.lo, a.hi + b.hi, false};
}
Ival ineg(const Ival& a) {
  if (a.empty) return a;
  return {-a.hi, -a.lo, false};
}
Ival isub(const Ival& a, const Ival& b) { return iadd(a, ineg(b)); }
Ival imul(const Ival& a, const Ival& b) {
  if (a.empty || b.empty) return Ival::none();
  XRat c[4] = {xmul(a.lo, b.lo), xmul(a.lo, b.hi), xmul(a.hi, b.lo),
               xmul(a.hi, b.hi)};
  Ival r{c[0], c[0], false};
  for (int i = 1; i < 4; ++i) {
    if (c[i] < r.lo) r.lo = c[i];
    if (c[i] > r.hi) r.hi = c[i];
  }
  return r;
}
Ival imin(const Ival& a, const Ival& b) {
  if (a.empty || b.empty) return Ival::none();
  return {min(a.lo, b.lo), min(a.hi, b.hi), false};
}
Ival imax(const Ival& a, const Ival& b) {
  if (a.empty || b.empty) return Ival::none();
  return {max(a.lo, b.lo), max(a.hi, b.hi), false};
}
Ival iabs(const Ival& a) {
  if (a.empty) return a;
  if (a.lo >= XRat(0)) return a;
  if (a.hi <= XRat(0)) return ineg(a);
  return {XRat(0), max(-a.lo, a.hi), false};
}
Ival ihull(const Ival& a, const Ival& b) {
  if (a.empty) return b;
  if (b.empty) return a;
  return {min(a.lo, b.lo), max(a.hi, b.hi), false};
}
Ival iclamp(const Ival& a, const XRat& lo, const XRat& hi) {
  if (a.empty) return a;
  Ival r{max(a.lo, lo), min(a.hi, hi), false};
  if (r.hi < r.lo) return Ival::none();
  return r;
}

enum class GTri { True, False, Unknown };

struct RegionCtx {
  std::vector<Ival> vars;
};

std::optional<Ival> region_eval(const Expr& e, const RegionCtx& c);

// Tri-valued guard check; on non-False outcome, refines single-variable
// atoms into the context (sound: outside the guard the value is +inf).
GTri guard_region(const Guard& g, RegionCtx& c) {
  GTri out = GTri::True;
  for (const auto& a : g.atoms) {
    auto l = region_eval(*a.lhs, c);
    auto r = region_eval(*a.rhs, c);
    if (!l || !r || l->empty || r->empty) return GTri::False;
    Ival d = isub(*l, *r);
    GTri t = GTri::Unknown;
    switch (a.op) {
      case Cmp::Le: t = d.hi <= XRat(0) ? GTri::True : (d.lo > XRat(0) ? GTri::False : GTri::Unknown); break;
      case Cmp::Ge: t = d.lo >= XRat(0) ? GTri::True : (d.hi < XRat(0) ? GTri::False : GTri::Unknown); break;
      case Cmp::Lt: t = d.hi < XRat(0) ? GTri::True : (d.lo >= XRat(0) ? GTri::False : GTri::Unknown); break;
      case Cmp::Gt: t = d.lo > XRat(0) ? GTri::True : (d.hi <= XRat(0) ? GTri::False : GTri::Unknown); break;
      case Cmp::Eq:
        t = (d.lo == XRat(0) && d.hi == XRat(0))
                ? GTri::True
                : ((d.lo > XRat(0) || d.hi < XRat(0)) ? GTri::False : GTri::Unknown);
        break;
    }
    if (t == GTri::False) return GTri::False;
    if (t == GTri::Unknown) out = GTri::Unknown;
    // refinement: Var against a degenerate interval
    if (a.lhs->kind == Expr::Kind::Var && r->lo == r->hi) {
      Ival& v = c.vars[a.lhs->var];
      switch (a.op) {
        case Cmp::Le: case Cmp::Lt: v = iclamp(v, XRat::minus_inf(), r->lo); break;
        case Cmp::Ge: case Cmp::Gt: v = iclamp(v, r->lo, XRat::plus_inf()); break;
        case Cmp::Eq: v = iclamp(v, r->lo, r->lo); break;
      }
      if (v.empty) return GTri::False;
    }
  }
  return out;
}

std::optional<Ival> region_eval(const Expr& e, const RegionCtx& c) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Const: return Ival::point(e.cval);
    case K::Var: return c.vars.at(e.var);
    case K::Add: case K::Sub: case K::Mul: {
      auto a = region_eval(*e.args[0], c);
      auto b = region_eval(*e.args[1], c);
      if (!a || !b) return std::nullopt;
      if (e.kind == K::Add) return iadd(*a, *b);
      if (e.kind == K::Sub) return isub(*a, *b);
      return imul(*a, *b);
    }
    case K::Neg: {
      auto a = region_eval(*e.args[0], c);
      if (!a) return std::nullopt;
      return ineg(*a);
    }
    case K::Min: case K::Max: {
      std::optional<Ival> acc;
      for (const auto& arg : e.args) {
        auto v = region_eval(*arg, c);
        if (!v) return std::nullopt;
        acc = acc ? (e.kind == K::Min ? imin(*acc, *v) : imax(*acc, *v)) : *v;
      }
      return acc;
    }
    case K::Abs: {
      auto a = region_eval(*e.args[0], c);
      if (!a) return std::nullopt;
      return iabs(*a);
    }
    case K::Cases: {
      std::optional<Ival> acc;
      for (const auto& [g, v] : e.cases) {
        RegionCtx sub = c;
        GTri t = guard_region(g, sub);
        if (t == GTri::False) continue;
        auto val = region_eval(*v, sub);
        if (val) acc = acc ? ihull(*acc, *val) : *val;
        if (t == GTri::True) break;
      }
      return acc;  // nullopt: no case can match, value +inf on the region
    }
  }
  throw std::logic_error("region_eval: bad kind");
}

// Lower bound of an expression gauge over a shift region, +inf when the
// region is certainly unsupported, -inf when inconclusive.
XRat region_lower_bound(const ExpressionGauge& g, const std::vector<Ival>& shift,
                        const ExponentVector& e,
                        const std::vector<DerivedGauge::Adjunction>& adj) {
  const VarTable& t = *g.table();
  RegionCtx c;
  c.vars.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    Ival x = Ival::point(e[i]);
    for (std::size_t k = 0; k < adj.size(); ++k) {
      Rat ti = adj[k].tau[i];
      if (ti == 0) continue;
      x = isub(x, imul(shift[k], Ival::point(ti)));
    }
    const auto& d = t.decl(i);
    if (d.nilpotency_cap)
      x = iclamp(x, XRat(0), XRat(Rat(*d.nilpotency_cap - 1)));
    else if (!d.invertible)
      x = iclamp(x, XRat(0), XRat::plus_inf());
    if (x.empty) return XRat::plus_inf();
    c.vars[i] = x;
  }
  GTri s = guard_region(g.support(), c);
  if (s == GTri::False) return XRat::plus_inf();
  auto v = region_eval(*g.value_expr(), c);
  if (!v) return XRat::plus_inf();
  if (v->empty) return XRat::plus_inf();
  return v->lo;
}

}  // namespace

// ---------------------------------------------------------------------------
// GeneratorGauge
// ---------------------------------------------------------------------------

GeneratorGauge::GeneratorGauge(VarTablePtr table, std::vector<Generator> gens)
    : table_(std::move(table)), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    require_same_table(table_, g.exponent.table());
    if (!g.exponent.declaration_valid())
      throw std::invalid_argument("GeneratorGauge: generator exponent invalid");
    for (std::size_t i = 0; i < g.exponent.size(); ++i)
      if (boost::multiprecision::denominator(g.exponent[i]) != 1)
        throw std::invalid_argument("GeneratorGauge: non-integer generator exponent");
  }
}

namespace {

long to_long(const Rat& r) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::invalid_argument("expected integer exponent");
  Int n = boost::multiprecision::numerator(r);
  if (n > 2000000000 || n < -2000000000)
    throw std::overflow_error("exponent too large");
  return static_cast<long>(n);
}

struct DpNode {
  long cost;
  std::vector<std::size_t> multiset;
};

}  // namespace

GaugeVerdict GeneratorGauge::eval(const ExponentVector& e, const EvalParams& p) const {
  require_same_table(table_, e.table());
  if (!e.declaration_valid()) return GaugeVerdict::plus_inf();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (boost::multiprecision::denominator(e[i]) != 1)
      return GaugeVerdict::plus_inf();

  std::vector<Rat> key(e.size() + 2);
  for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i];
  key[e.size()] = Rat(p.horizon);
  key[e.size() + 1] = Rat(p.dp_budget);
  {
    std::lock_guard<std::mutex> lk(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  const std::size_t dims = e.size();
  std::vector<long> target(dims);
  for (std::size_t i = 0; i < dims; ++i) target[i] = to_long(e[i]);

  std::vector<std::vector<long>> gv;
  std::vector<long> gcost;
  for (const auto& g : gens_) {
    std::vector<long> v(dims);
    for (std::size_t i = 0; i < dims; ++i) v[i] = to_long(g.exponent[i]);
    gv.push_back(std::move(v));
    gcost.push_back(g.cost);
  }

  // A coordinate is monotone when no generator decreases it; targets on
  // monotone coordinates cap the whole search.
  std::vector<bool> monotone(dims, true);
  for (const auto& v : gv)
    for (std::size_t i = 0; i < dims; ++i)
      if (v[i] < 0) monotone[i] = false;

  auto finish = [&](GaugeVerdict out) {
    out.horizon = p.horizon;
    std::lock_guard<std::mutex> lk(cache_mutex_);
    cache_.emplace(key, out);
    return out;
  };

  for (std::size_t i = 0; i < dims; ++i)
    if (monotone[i] && target[i] < 0) return finish(GaugeVerdict::plus_inf());

  long M = 0;  // bound on the number of non-positive-cost generators used
  for (std::size_t i = 0; i < dims; ++i)
    if (monotone[i]) M += target[i];

  bool confinement = true;
  long maxneg = 0, mincost_paid = 0, maxstep = 1;
  bool any_paid = false;
  for (std::size_t g = 0; g < gv.size(); ++g) {
    long linf = 0;
    for (long x : gv[g]) linf = std::max(linf, std::abs(x));
    maxstep = std::max(maxstep, linf);
    if (gcost[g] > 0) {
      any_paid = true;
      mincost_paid = any_paid && mincost_paid > 0 ? std::min(mincost_paid, gcost[g]) : gcost[g];
    } else {
      maxneg = std::max(maxneg, -gcost[g]);
      bool footprint = false;
      for (std::size_t i = 0; i < dims; ++i)
        if (monotone[i] && gv[g][i] > 0) footprint = true;
      if (!footprint) confinement = false;
    }
  }

  (void)any_paid;
  (void)mincost_paid;

  const long kRadiusCap = 20000;

  auto run_spfa = [&](long radius) -> std::optional<DpNode> {
    std::vector<long> lo(dims), hi(dims);
    for (std::size_t i = 0; i < dims; ++i) {
      if (monotone[i]) {
        lo[i] = 0;
        hi[i] = target[i];
      } else {
        lo[i] = std::min(0L, target[i]) - radius;
        hi[i] = std::max(0L, target[i]) + radius;
      }
      const auto& d = table_->decl(i);
      if (d.nilpotency_cap) hi[i] = std::min(hi[i], *d.nilpotency_cap - 1);
    }
    std::map<std::vector<long>, DpNode> dist;
    std::deque<std::vector<long>> work;
    std::vector<long> origin(dims, 0);
    dist.emplace(origin, DpNode{0, {}});
    work.push_back(origin);
    long relaxations = 0;
    while (!work.empty()) {
      auto s = work.front();
      work.pop_front();
      DpNode cur = dist.at(s);
      for (std::size_t g = 0; g < gv.size(); ++g) {
        std::vector<long> nxt = s;
        bool ok = true;
        for (std::size_t i = 0; i < dims && ok; ++i) {
          nxt[i] += gv[g][i];
          if (nxt[i] < lo[i] || nxt[i] > hi[i]) ok = false;
        }
        if (!ok) continue;
        DpNode cand{cur.cost + gcost[g], cur.multiset};
        cand.multiset.insert(
            std::lower_bound(cand.multiset.begin(), cand.multiset.end(), g), g);
        auto it = dist.find(nxt);
        bool better = it == dist.end() || cand.cost < it->second.cost ||
                      (cand.cost == it->second.cost &&
                       cand.multiset < it->second.multiset);
        if (better) {
          if (it == dist.end())
            dist.emplace(nxt, std::move(cand));
          else
            it->second = std::move(cand);
          work.push_back(nxt);
          if (++relaxations > 4000000)
            throw std::overflow_error("generator gauge search exploded");
        }
      }
    }
    auto it = dist.find(target);
    if (it == dist.end()) return std::nullopt;
    return it->second;
  };

  // Any multiset summing to the target admits an ordering whose partial
  // sums stay within the bounding box of {0, target} inflated by
  // dims * maxstep (Steinitz rearrangement), so searching that box is
  // complete: reachable targets get exact values, unreachable ones are
  // certainly outside the ring.  Confinement (every non-positive-cost
  // generator strictly increases a monotone coordinate) rules out negative
  // cycles, so the shortest-path relaxation terminates.
  long steinitz = static_cast<long>(dims) * maxstep + 1;
  long radius = std::min(steinitz, kRadiusCap);
  if (p.dp_budget > 0) radius = std::min(radius, p.dp_budget);
  bool exhaustive = confinement && radius == steinitz;

  std::optional<DpNode> best;
  try {
    best = run_spfa(radius);
  } catch (const std::overflow_error&) {
    exhaustive = false;
    best = std::nullopt;
    if (radius > maxstep + 1) {
      try {
        best = run_spfa(maxstep + 1);
      } catch (const std::overflow_error&) {
      }
    }
  }

  GaugeVerdict out;
  XRat floor_bound = confinement ? XRat(Rat(-M * maxneg)) : XRat::minus_inf();
  if (best && exhaustive) {
    out = GaugeVerdict::exact(Rat(best->cost));
    out.witness_multiset = best->multiset;
  } else if (best) {
    out.status = GaugeVerdict::Status::AtMost;
    out.upper = XRat(Rat(best->cost));
    out.lower = floor_bound;
    out.witness_multiset = best->multiset;
  } else if (exhaustive) {
    out = GaugeVerdict::plus_inf();
  } else {
    out.status = GaugeVerdict::Status::Inconclusive;
    out.lower = floor_bound;
  }
  return finish(out);
}

XRat generator_gauge_oracle(const GeneratorGauge& g, const ExponentVector& e,
                            std::size_t bound, std::vector<std::size_t>* witness) {
  const auto& gens = g.generators();
  const VarTable& t = *g.table();
  std::size_t dims = e.size();

  std::optional<long> best;
  std::vector<std::size_t> best_ms;
  std::vector<std::size_t> ms;
  long explored = 0;

  std::vector<Rat> sum(dims, Rat(0));

  auto alive = [&]() {
    for (std::size_t i = 0; i < dims; ++i) {
      const auto& d = t.decl(i);
      if (d.nilpotency_cap && sum[i] >= *d.nilpotency_cap) return false;
    }
    return true;
  };

  std::function<void(std::size_t, long)> rec = [&](std::size_t from, long cost) {
    if (++explored > 20000000)
      throw std::overflow_error("generator_gauge_oracle: bound too large");
    bool hit = true;
    for (std::size_t i = 0; i < dims; ++i)
      if (sum[i] != e[i]) hit = false;
    if (hit) {
      if (!best || cost < *best || (cost == *best && ms < best_ms)) {
        best = cost;
        best_ms = ms;
      }
    }
    if (ms.size() == bound) return;
    for (std::size_t gi = from; gi < gens.size(); ++gi) {
      for (std::size_t i = 0; i < dims; ++i) sum[i] += gens[gi].exponent[i];
      ms.push_back(gi);
      if (alive()) rec(gi, cost + gens[gi].cost);
      ms.pop_back();
      for (std::size_t i = 0; i < dims; ++i) sum[i] -= gens[gi].exponent[i];
    }
  };
  rec(0, 0);

  if (!best) return XRat::plus_inf();
  if (witness) *witness = best_ms;
  return XRat(Rat(*best));
}

// ---------------------------------------------------------------------------
// DerivedGauge
// ---------------------------------------------------------------------------

DerivedGauge::DerivedGauge(GaugePtr base, std::vector<Adjunction> adjoined)
    : base_(std::move(base)), adjoined_(std::move(adjoined)) {
  for (const auto& a : adjoined_) {
    require_same_table(base_->table(), a.tau.table());
    if (a.tau.is_zero()) continue;
  }
  // flatten nested derivations; adjunction infima commute
  if (auto inner = std::dynamic_pointer_cast<const DerivedGauge>(base_)) {
    auto merged = inner->adjoined_;
    merged.insert(merged.end(), adjoined_.begin(), adjoined_.end());
    adjoined_ = std::move(merged);
    base_ = inner->base_;
  }
  std::sort(adjoined_.begin(), adjoined_.end(),
            [](const Adjunction& x, const Adjunction& y) {
              if (x.tau == y.tau) return static_cast<int>(x.dir) < static_cast<int>(y.dir);
              return x.tau < y.tau;
            });
}

GaugeVerdict DerivedGauge::eval_at_limit(const ExponentVector& e,
                                         const EvalParams& p, long limit,
                                         bool& boundary) const {
  const auto* expr_base = dynamic_cast<const ExpressionGauge*>(base_.get());

  struct Sample {
    Rat value;
    ExponentVector shifted;
  };
  std::vector<Sample> finite;
  XRat min_upper = XRat::plus_inf();
  XRat min_lower = XRat::plus_inf();
  bool any_nonexact = false;
  boundary = false;

  std::vector<long> j(adjoined_.size(), 0);
  std::function<void(std::size_t, const ExponentVector&)> walk =
      [&](std::size_t k, const ExponentVector& shifted) {
        if (k == adjoined_.size()) {
          GaugeVerdict v;
          if (expr_base) {
            auto val = expr_base->value_at(shifted);
            v = val ? GaugeVerdict::exact(*val) : GaugeVerdict::plus_inf();
          } else {
            v = base_->eval(shifted, p);
          }
          if (v.status == GaugeVerdict::Status::PlusInf) return;
          if (!v.is_exact()) any_nonexact = true;
          if (v.upper < min_upper) {
            min_upper = v.upper;
            boundary = false;
            for (std::size_t i = 0; i < adjoined_.size(); ++i)
              if (j[i] == limit || j[i] == -limit) boundary = true;
          }
          if (v.lower < min_lower) min_lower = v.lower;
          if (v.upper.finite())
            finite.push_back({v.upper.value(), shifted});
          return;
        }
        long lo = adjoined_[k].dir == AdjoinDir::NonNeg ? 0 : -limit;
        long hi = adjoined_[k].dir == AdjoinDir::NonPos ? 0 : limit;
        for (long s = lo; s <= hi; ++s) {
          j[k] = s;
          walk(k + 1, shifted - adjoined_[k].tau.scaled(Rat(s)));
        }
      };
  walk(0, e);

  GaugeVerdict out;
  out.horizon = p.horizon;

  // Witness family for descent certification.
  std::sort(finite.begin(), finite.end(),
            [](const Sample& a, const Sample& b) {
              if (a.value != b.value) return a.value < b.value;
              return a.shifted < b.shifted;
            });

  // Lower bound over the escape regions outside the shift box.
  XRat region_lb = XRat::plus_inf();
  if (expr_base && !adjoined_.empty()) {
    std::size_t m = adjoined_.size();
    std::vector<std::vector<int>> modes(m);  // 0 = in box, 1 = escape+, 2 = escape-
    for (std::size_t k = 0; k < m; ++k) {
      modes[k].push_back(0);
      if (adjoined_[k].dir != AdjoinDir::NonPos) modes[k].push_back(1);
      if (adjoined_[k].dir != AdjoinDir::NonNeg) modes[k].push_back(2);
    }
    std::vector<int> pick(m, 0);
    std::function<void(std::size_t, bool)> regions = [&](std::size_t k, bool escaped) {
      if (k == m) {
        if (!escaped) return;
        std::vector<Ival> shift(m);
        for (std::size_t i = 0; i < m; ++i) {
          long lo = adjoined_[i].dir == AdjoinDir::NonNeg ? 0 : -limit;
          long hi = adjoined_[i].dir == AdjoinDir::NonPos ? 0 : limit;
          if (pick[i] == 0)
            shift[i] = {XRat(Rat(lo)), XRat(Rat(hi)), false};
          else if (pick[i] == 1)
            shift[i] = {XRat(Rat(limit + 1)), XRat::plus_inf(), false};
          else
            shift[i] = {XRat::minus_inf(), XRat(Rat(-limit - 1)), false};
        }
        XRat lb = region_lower_bound(*expr_base, shift, e, adjoined_);
        if (lb < region_lb) region_lb = lb;
        return;
      }
      for (int mo : modes[k]) {
        pick[k] = mo;
        regions(k + 1, escaped || mo != 0);
      }
    };
    regions(0, false);
  } else if (!adjoined_.empty()) {
    region_lb = XRat::minus_inf();
  }

  XRat lower = min(min_lower, region_lb);

  if (min_upper.is_plus_inf()) {
    if (region_lb.is_plus_inf() && !any_nonexact) return GaugeVerdict::plus_inf();
    out.status = GaugeVerdict::Status::Inconclusive;
    out.lower = lower;
    return out;
  }
  if (!any_nonexact && lower == min_upper) {
    out = GaugeVerdict::exact(min_upper.value());
    out.horizon = p.horizon;
    if (!finite.empty()) out.witnesses.push_back(finite.front().shifted);
    return out;
  }
  if (min_upper <= XRat(Rat(-p.horizon))) {
    out.status = GaugeVerdict::Status::MinusInfCertified;
    out.upper = min_upper;
    out.lower = lower;
    out.depth = static_cast<long>(rat_floor(-min_upper.value()));
    if (out.depth > p.horizon) out.depth = p.horizon;
    for (long n = 1; n <= out.depth; ++n) {
      // shallowest witness at each level
      for (auto it = finite.rbegin(); it != finite.rend(); ++it)
        if (it->value <= Rat(-n)) {
          out.witnesses.push_back(it->shifted);
          break;
        }
    }
    return out;
  }
  out.status = GaugeVerdict::Status::AtMost;
  out.upper = min_upper;
  out.lower = lower;
  if (!finite.empty()) out.witnesses.push_back(finite.front().shifted);
  return out;
}

GaugeVerdict DerivedGauge::eval(const ExponentVector& e, const EvalParams& p) const {
  require_same_table(table(), e.table());
  if (adjoined_.empty()) return base_->eval(e, p);

  std::vector<Rat> key(e.size() + 2);
  for (std::size_t i = 0; i < e.size(); ++i) key[i] = e[i];
  key[e.size()] = Rat(p.horizon);
  key[e.size() + 1] = Rat(p.shifts());
  {
    std::lock_guard<std::mutex> lk(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  long limit = p.shifts();
  GaugeVerdict last;
  for (;;) {
    bool boundary = false;
    last = eval_at_limit(e, p, limit, boundary);
    if (last.status == GaugeVerdict::Status::Exact ||
        last.status == GaugeVerdict::Status::PlusInf)
      break;
    // enlarging the shift box only helps while the observed minimum sits on
    // its boundary
    if (!boundary && last.status != GaugeVerdict::Status::Inconclusive) break;
    long next = limit * 2;
    double count = 1;
    for (const auto& a : adjoined_)
      count *= (a.dir == AdjoinDir::Both ? 2.0 * next + 1 : next + 1);
    if (next > 4096 || count > 2000000.0) break;
    limit = next;
  }
  std::lock_guard<std::mutex> lk(cache_mutex_);
  cache_.emplace(key, last);
  return last;
}

// ---------------------------------------------------------------------------
// Intersection
// ---------------------------------------------------------------------------

IntersectionGauge::IntersectionGauge(GaugePtr a, GaugePtr b)
    : a_(std::move(a)), b_(std::move(b)) {
  require_same_table(a_->table(), b_->table());
}

GaugeVerdict combine_max(const GaugeVerdict& a, const GaugeVerdict& b, long horizon) {
  GaugeVerdict out;
  out.horizon = horizon;
  out.lower = max(a.lower, b.lower);
  out.upper = max(a.upper, b.upper);
  if (out.lower.is_plus_inf() && out.upper.is_plus_inf())
    return GaugeVerdict::plus_inf();
  if (out.lower == out.upper && out.lower.finite()) {
    GaugeVerdict e = GaugeVerdict::exact(out.lower.value());
    e.horizon = horizon;
    return e;
  }
  if (a.status == GaugeVerdict::Status::MinusInfCertified &&
      b.status == GaugeVerdict::Status::MinusInfCertified) {
    out.status = GaugeVerdict::Status::MinusInfCertified;
    out.depth = std::min(a.depth, b.depth);
    out.witnesses = a.depth <= b.depth ? a.witnesses : b.witnesses;
    return out;
  }
  if (out.upper.finite()) {
    out.status = GaugeVerdict::Status::AtMost;
    return out;
  }
  out.status = GaugeVerdict::Status::Inconclusive;
  return out;
}

GaugeVerdict IntersectionGauge::eval(const ExponentVector& e, const EvalParams& p) const {
  return combine_max(a_->eval(e, p), b_->eval(e, p), p.horizon);
}

GaugePtr gauge_intersection(GaugePtr a, GaugePtr b) {
  return std::make_shared<IntersectionGauge>(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Membership and slope
// ---------------------------------------------------------------------------

Tri membership(const RingElement& x, const Gauge& g, const Rat& n,
               const EvalParams& p) {
  const Int& prime = x.table()->prime();
  bool all_yes = true;
  for (const auto& [e, c] : x.terms()) {
    XRat v = padic_valuation(c, prime);
    GaugeVerdict gv = g.eval(e, p);
    if (v < XRat(n) + gv.lower) return Tri::No;
    if (!(v >= XRat(n) + gv.upper)) all_yes = false;
  }
  return all_yes ? Tri::Yes : Tri::Inconclusive;
}

SlopeVerdict asymptotic_slope(const Gauge& g, const ExponentVector& e,
                              const EvalParams& p) {
  SlopeVerdict out;

  // samples for the report, and monotonicity of gauge(n e)/n
  std::vector<std::optional<Rat>> samples;
  long H = std::max(p.horizon, 2L);
  for (long n = 1; n <= H; ++n) {
    GaugeVerdict v = g.eval(e.scaled(Rat(n)), p);
    if (v.is_exact())
      samples.push_back(v.exact_value());
    else if (v.upper.finite())
      samples.push_back(v.upper.value());
    else
      samples.push_back(std::nullopt);
  }
  if (samples.back()) out.sample_at_horizon = *samples.back() / Rat(H);
  out.samples_monotone_nonincreasing = true;
  std::optional<Rat> prev;
  for (long n = 1; n <= H; ++n) {
    if (!samples[n - 1]) continue;
    Rat ratio = *samples[n - 1] / Rat(n);
    if (prev && ratio > *prev) out.samples_monotone_nonincreasing = false;
    prev = ratio;
  }

  if (const auto* eg = dynamic_cast<const ExpressionGauge*>(&g)) {
    RayValue r = eg->ray(ExponentVector(e.table()), e);
    out.stable_from = r.stable_from;
    if (!r.supported) {
      out.kind = SlopeVerdict::Kind::Unsupported;
      return out;
    }
    out.tail = r.poly;
    if (r.poly.size() <= 2) {
      out.kind = SlopeVerdict::Kind::ExactSlope;
      out.slope = r.poly.size() == 2 ? r.poly[1] : Rat(0);
    } else {
      out.kind = poly_eventual_sign(r.poly) > 0 ? SlopeVerdict::Kind::PlusInfRate
                                                : SlopeVerdict::Kind::MinusInfRate;
    }
    return out;
  }
  out.kind = SlopeVerdict::Kind::SampledOnly;
  return out;
}

}  // namespace tate
