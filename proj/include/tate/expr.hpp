#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "tate/rational.hpp"

namespace tate {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class Cmp { Le, Ge, Eq, Lt, Gt };

/// Conjunction of comparisons between expressions; empty = always true.
struct Guard {
  struct Atom {
    ExprPtr lhs;
    Cmp op;
    ExprPtr rhs;
  };
  std::vector<Atom> atoms;
};

/// Closed-form gauge expression over exponent variables: affine forms,
/// products, min/max/abs and guarded cases.  Cases pick the first piece
/// whose guard holds; no match means +inf (monomial outside the ring).
struct Expr {
  enum class Kind { Const, Var, Add, Sub, Mul, Neg, Min, Max, Abs, Cases };

  Kind kind = Kind::Const;
  Rat cval = 0;          // Const
  std::size_t var = 0;   // Var: index into the exponent vector
  std::vector<ExprPtr> args;
  std::vector<std::pair<Guard, ExprPtr>> cases;
};

// Builders.
ExprPtr e_const(Rat c);
ExprPtr e_var(std::size_t i);
ExprPtr e_add(ExprPtr a, ExprPtr b);
ExprPtr e_sub(ExprPtr a, ExprPtr b);
ExprPtr e_mul(ExprPtr a, ExprPtr b);
ExprPtr e_neg(ExprPtr a);
ExprPtr e_min(std::vector<ExprPtr> args);
ExprPtr e_max(std::vector<ExprPtr> args);
ExprPtr e_abs(ExprPtr a);
ExprPtr e_cases(std::vector<std::pair<Guard, ExprPtr>> cases);

/// Point evaluation; nullopt when no case matches (value +inf).
std::optional<Rat> eval_point(const Expr& e, const std::vector<Rat>& x);
bool eval_guard(const Guard& g, const std::vector<Rat>& x);

/// Dense univariate polynomial in the ray parameter, coefficient of t^k at
/// index k, trailing zeros stripped.
using Poly = std::vector<Rat>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
int poly_eventual_sign(const Poly& p);  // sign of p(t) for large t
Rat poly_eval(const Poly& p, const Rat& t);

/// All real roots of p (and hence all sign changes) lie in |t| <= bound.
long poly_root_bound(const Poly& p);

/// Evaluation along the ray x_i(t) = base_i + t * dir_i for t -> +inf.
/// On success, value(t) == poly(t) for all integer t > stable_from, and all
/// case/min/max/abs decisions are constant there.  supported == false means
/// the expression is +inf for all t > stable_from.
struct RayValue {
  bool supported = true;
  Poly poly;
  long stable_from = 0;
};

RayValue eval_ray(const Expr& e, const std::vector<Rat>& base,
                  const std::vector<Rat>& dir);
/// Eventual truth of a guard along a ray, widening stable_from.
bool eval_guard_ray(const Guard& g, const std::vector<Rat>& base,
                    const std::vector<Rat>& dir, long& stable_from);

}  // namespace tate
