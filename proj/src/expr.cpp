#include "tate/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace tate {

namespace {
ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }
}  // namespace

ExprPtr e_const(Rat c) {
  Expr e;
  e.kind = Expr::Kind::Const;
  e.cval = std::move(c);
  return make(std::move(e));
}
ExprPtr e_var(std::size_t i) {
  Expr e;
  e.kind = Expr::Kind::Var;
  e.var = i;
  return make(std::move(e));
}
static ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
  Expr e;
  e.kind = k;
  e.args = {std::move(a), std::move(b)};
  return make(std::move(e));
}
ExprPtr e_add(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::Add, std::move(a), std::move(b)); }
ExprPtr e_sub(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::Sub, std::move(a), std::move(b)); }
ExprPtr e_mul(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::Mul, std::move(a), std::move(b)); }
ExprPtr e_neg(ExprPtr a) {
  Expr e;
  e.kind = Expr::Kind::Neg;
  e.args = {std::move(a)};
  return make(std::move(e));
}
ExprPtr e_min(std::vector<ExprPtr> args) {
  if (args.empty()) throw std::invalid_argument("e_min: empty");
  Expr e;
  e.kind = Expr::Kind::Min;
  e.args = std::move(args);
  return make(std::move(e));
}
ExprPtr e_max(std::vector<ExprPtr> args) {
  if (args.empty()) throw std::invalid_argument("e_max: empty");
  Expr e;
  e.kind = Expr::Kind::Max;
  e.args = std::move(args);
  return make(std::move(e));
}
ExprPtr e_abs(ExprPtr a) {
  Expr e;
  e.kind = Expr::Kind::Abs;
  e.args = {std::move(a)};
  return make(std::move(e));
}
ExprPtr e_cases(std::vector<std::pair<Guard, ExprPtr>> cases) {
  Expr e;
  e.kind = Expr::Kind::Cases;
  e.cases = std::move(cases);
  return make(std::move(e));
}

bool eval_guard(const Guard& g, const std::vector<Rat>& x) {
  for (const auto& a : g.atoms) {
    auto l = eval_point(*a.lhs, x);
    auto r = eval_point(*a.rhs, x);
    if (!l || !r) return false;
    switch (a.op) {
      case Cmp::Le: if (!(*l <= *r)) return false; break;
      case Cmp::Ge: if (!(*l >= *r)) return false; break;
      case Cmp::Eq: if (!(*l == *r)) return false; break;
      case Cmp::Lt: if (!(*l < *r)) return false; break;
      case Cmp::Gt: if (!(*l > *r)) return false; break;
    }
  }
  return true;
}

std::optional<Rat> eval_point(const Expr& e, const std::vector<Rat>& x) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Const: return e.cval;
    case K::Var: return x.at(e.var);
    case K::Add: case K::Sub: case K::Mul: {
      auto a = eval_point(*e.args[0], x);
      auto b = eval_point(*e.args[1], x);
      if (!a || !b) return std::nullopt;
      if (e.kind == K::Add) return *a + *b;
      if (e.kind == K::Sub) return *a - *b;
      return *a * *b;
    }
    case K::Neg: {
      auto a = eval_point(*e.args[0], x);
      if (!a) return std::nullopt;
      return -*a;
    }
    case K::Min: case K::Max: {
      std::optional<Rat> acc;
      for (const auto& arg : e.args) {
        auto v = eval_point(*arg, x);
        if (!v) return std::nullopt;
        if (!acc)
          acc = *v;
        else if (e.kind == K::Min ? (*v < *acc) : (*v > *acc))
          acc = *v;
      }
      return acc;
    }
    case K::Abs: {
      auto a = eval_point(*e.args[0], x);
      if (!a) return std::nullopt;
      return *a < 0 ? -*a : *a;
    }
    case K::Cases: {
      for (const auto& [g, v] : e.cases)
        if (eval_guard(g, x)) return eval_point(*v, x);
      return std::nullopt;
    }
  }
  throw std::logic_error("eval_point: bad kind");
}

// ---- polynomial helpers ----

static void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  poly_trim(r);
  return r;
}
Poly poly_neg(const Poly& a) {
  Poly r = a;
  for (auto& c : r) c = -c;
  return r;
}
Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }
Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}
int poly_eventual_sign(const Poly& p) {
  if (p.empty()) return 0;
  const Rat& c = p.back();
  return c > 0 ? 1 : (c < 0 ? -1 : 0);
}
Rat poly_eval(const Poly& p, const Rat& t) {
  Rat v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}
long poly_root_bound(const Poly& p) {
  if (p.size() <= 1) return 0;
  Rat lead = p.back();
  Rat m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rat q = p[i] / lead;
    if (q < 0) q = -q;
    if (q > m) m = q;
  }
  Int b = rat_ceil(m + 1);
  if (b > 1000000000) throw std::overflow_error("poly_root_bound: huge bound");
  return static_cast<long>(b);
}

// ---- ray evaluation ----

namespace {

struct RayCtx {
  const std::vector<Rat>& base;
  const std::vector<Rat>& dir;
  long stable_from = 0;

  void note(const Poly& diff) {
    long b = poly_root_bound(diff);
    if (b > stable_from) stable_from = b;
  }
  // Eventual sign, recording when it becomes stable.
  int sign(const Poly& p) {
    note(p);
    return poly_eventual_sign(p);
  }
};

std::optional<Poly> ray_rec(const Expr& e, RayCtx& c);

bool guard_ray_rec(const Guard& g, RayCtx& c) {
  for (const auto& a : g.atoms) {
    auto l = ray_rec(*a.lhs, c);
    auto r = ray_rec(*a.rhs, c);
    if (!l || !r) return false;
    int s = c.sign(poly_sub(*l, *r));
    switch (a.op) {
      case Cmp::Le: if (s > 0) return false; break;
      case Cmp::Ge: if (s < 0) return false; break;
      case Cmp::Eq: if (s != 0) return false; break;
      case Cmp::Lt: if (s >= 0) return false; break;
      case Cmp::Gt: if (s <= 0) return false; break;
    }
  }
  return true;
}

std::optional<Poly> ray_rec(const Expr& e, RayCtx& c) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Const: {
      Poly p{e.cval};
      if (e.cval == 0) p.clear();
      return p;
    }
    case K::Var: {
      Poly p{c.base.at(e.var), c.dir.at(e.var)};
      poly_trim(p);
      while (!p.empty() && p.back() == 0) p.pop_back();
      return p;
    }
    case K::Add: case K::Sub: case K::Mul: {
      auto a = ray_rec(*e.args[0], c);
      auto b = ray_rec(*e.args[1], c);
      if (!a || !b) return std::nullopt;
      if (e.kind == K::Add) return poly_add(*a, *b);
      if (e.kind == K::Sub) return poly_sub(*a, *b);
      return poly_mul(*a, *b);
    }
    case K::Neg: {
      auto a = ray_rec(*e.args[0], c);
      if (!a) return std::nullopt;
      return poly_neg(*a);
    }
    case K::Min: case K::Max: {
      std::optional<Poly> acc;
      for (const auto& arg : e.args) {
        auto v = ray_rec(*arg, c);
        if (!v) return std::nullopt;
        if (!acc) {
          acc = *v;
          continue;
        }
        int s = c.sign(poly_sub(*v, *acc));
        bool take = (e.kind == K::Min) ? (s < 0) : (s > 0);
        if (take) acc = *v;
      }
      return acc;
    }
    case K::Abs: {
      auto a = ray_rec(*e.args[0], c);
      if (!a) return std::nullopt;
      return c.sign(*a) < 0 ? poly_neg(*a) : *a;
    }
    case K::Cases: {
      for (const auto& [g, v] : e.cases)
        if (guard_ray_rec(g, c)) return ray_rec(*v, c);
      return std::nullopt;
    }
  }
  throw std::logic_error("ray_rec: bad kind");
}

}  // namespace

RayValue eval_ray(const Expr& e, const std::vector<Rat>& base,
                  const std::vector<Rat>& dir) {
  RayCtx c{base, dir};
  auto p = ray_rec(e, c);
  RayValue r;
  r.stable_from = c.stable_from;
  if (!p) {
    r.supported = false;
    return r;
  }
  r.poly = *p;
  return r;
}

bool eval_guard_ray(const Guard& g, const std::vector<Rat>& base,
                    const std::vector<Rat>& dir, long& stable_from) {
  RayCtx c{base, dir};
  bool ok = guard_ray_rec(g, c);
  if (c.stable_from > stable_from) stable_from = c.stable_from;
  return ok;
}

}  // namespace tate
