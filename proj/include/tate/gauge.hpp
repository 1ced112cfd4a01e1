#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tate/element.hpp"
#include "tate/expr.hpp"
#include "tate/exponent.hpp"

namespace tate {

/// Search depths for gauge evaluation.  horizon is the certification depth
/// for -inf claims; shift_limit widens the adjunction-shift search box
/// (0 = derive from horizon); dp_budget caps the generator-gauge search
/// box radius (0 = the complete rearrangement bound).
struct EvalParams {
  long horizon = 24;
  long shift_limit = 0;
  long dp_budget = 0;

  long shifts() const { return shift_limit > 0 ? shift_limit : horizon; }
};

/// Extended-integer gauge answer with certification status.
///
/// lower/upper always bracket the true gauge value; Exact means they agree
/// and are finite, PlusInf means the monomial is outside the ring,
/// MinusInfCertified(depth) records witnesses w_n of gauge value <= -n for
/// every n <= depth (a horizon-relative claim, never a proof of -inf).
struct GaugeVerdict {
  enum class Status { Exact, AtMost, MinusInfCertified, PlusInf, Inconclusive };

  Status status = Status::Inconclusive;
  XRat lower = XRat::minus_inf();
  XRat upper = XRat::plus_inf();
  long horizon = 0;
  long depth = 0;                          // MinusInfCertified
  std::vector<ExponentVector> witnesses;   // shifted monomials certifying descent
  std::vector<std::size_t> witness_multiset;  // generator indices (DP / oracle)

  static GaugeVerdict exact(Rat v) {
    GaugeVerdict g;
    g.status = Status::Exact;
    g.lower = g.upper = XRat(std::move(v));
    return g;
  }
  static GaugeVerdict plus_inf() {
    GaugeVerdict g;
    g.status = Status::PlusInf;
    g.lower = g.upper = XRat::plus_inf();
    return g;
  }
  bool is_exact() const { return status == Status::Exact; }
  const Rat& exact_value() const { return lower.value(); }
  std::string str() const;
};

class Gauge {
 public:
  virtual ~Gauge() = default;
  virtual const VarTablePtr& table() const = 0;
  virtual GaugeVerdict eval(const ExponentVector& e, const EvalParams& p) const = 0;
};

using GaugePtr = std::shared_ptr<const Gauge>;

/// Closed-form gauge: a guarded expression over the exponent entries.
/// Unmatched guards and declaration-invalid exponents evaluate to +inf.
class ExpressionGauge : public Gauge {
 public:
  ExpressionGauge(VarTablePtr table, Guard support, ExprPtr value)
      : table_(std::move(table)), support_(std::move(support)), value_(std::move(value)) {}

  const VarTablePtr& table() const override { return table_; }
  GaugeVerdict eval(const ExponentVector& e, const EvalParams& p) const override;

  /// Value at a possibly off-lattice point; nullopt = +inf.
  std::optional<Rat> value_at(const ExponentVector& e) const;

  /// Behavior of gauge(base + t * dir) for large integer t.  supported=false
  /// means +inf for all t beyond stable_from.
  RayValue ray(const ExponentVector& base, const ExponentVector& dir) const;

  const Guard& support() const { return support_; }
  const ExprPtr& value_expr() const { return value_; }

 private:
  VarTablePtr table_;
  Guard support_;
  ExprPtr value_;
};

/// Generated ring of definition: gauge(e) = minimum total cost over
/// generator multisets with exponent sum e, +inf when none exists.
class GeneratorGauge : public Gauge {
 public:
  struct Generator {
    ExponentVector exponent;
    long cost;
  };

  GeneratorGauge(VarTablePtr table, std::vector<Generator> gens);

  const VarTablePtr& table() const override { return table_; }
  GaugeVerdict eval(const ExponentVector& e, const EvalParams& p) const override;

  const std::vector<Generator>& generators() const { return gens_; }

 private:
  VarTablePtr table_;
  std::vector<Generator> gens_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<Rat>, GaugeVerdict> cache_;
};

/// Independent brute-force minimizer over all generator multisets of size
/// <= bound.  Exhaustive for the sizes it is given; test oracle for the DP.
XRat generator_gauge_oracle(const GeneratorGauge& g, const ExponentVector& e,
                            std::size_t bound,
                            std::vector<std::size_t>* witness = nullptr);

enum class AdjoinDir { NonNeg, NonPos, Both };

/// Localized gauge: base gauge with adjoined monomials t (shifts along
/// +tau), 1/t (shifts along -tau) or both.  derived(e) = inf over admissible
/// shift tuples of base(e - sum j_k tau_k); always <= base pointwise.
class DerivedGauge : public Gauge {
 public:
  struct Adjunction {
    ExponentVector tau;
    AdjoinDir dir;
  };

  DerivedGauge(GaugePtr base, std::vector<Adjunction> adjoined);

  const VarTablePtr& table() const override { return base_->table(); }
  GaugeVerdict eval(const ExponentVector& e, const EvalParams& p) const override;

  const GaugePtr& base() const { return base_; }
  const std::vector<Adjunction>& adjunctions() const { return adjoined_; }

 private:
  GaugeVerdict eval_at_limit(const ExponentVector& e, const EvalParams& p,
                             long limit, bool& boundary) const;
  GaugePtr base_;
  std::vector<Adjunction> adjoined_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<Rat>, GaugeVerdict> cache_;
};

/// Pointwise max of two gauges (the S_0 = A_0 n phi^{-1}(B_0) construction).
class IntersectionGauge : public Gauge {
 public:
  IntersectionGauge(GaugePtr a, GaugePtr b);

  const VarTablePtr& table() const override { return a_->table(); }
  GaugeVerdict eval(const ExponentVector& e, const EvalParams& p) const override;

  const GaugePtr& left() const { return a_; }
  const GaugePtr& right() const { return b_; }

 private:
  GaugePtr a_, b_;
};

GaugePtr gauge_intersection(GaugePtr a, GaugePtr b);

/// Verdict for max(a, b) given operand verdicts.
GaugeVerdict combine_max(const GaugeVerdict& a, const GaugeVerdict& b, long horizon);

enum class Tri { Yes, No, Inconclusive };
std::string tri_str(Tri t);

/// x in pi^n R_0, term by term: yes iff v(coeff) >= n + gauge(monomial) for
/// every term, three-valued under non-exact verdicts.  Unsupported
/// monomials make the answer no.
Tri membership(const RingElement& x, const Gauge& g, const Rat& n,
               const EvalParams& p);

/// Growth rate of gauge(n*e) as n -> inf.
struct SlopeVerdict {
  enum class Kind {
    ExactSlope,    // tail polynomial has degree <= 1; slope is its linear coeff
    PlusInfRate,   // tail degree >= 2 with positive leading coeff
    MinusInfRate,  // tail degree >= 2 with negative leading coeff
    Unsupported,   // gauge(n e) = +inf for all large n
    SampledOnly    // no closed form; sample and monotonicity only
  };
  Kind kind = Kind::SampledOnly;
  Rat slope = 0;
  Poly tail;            // eventual polynomial of gauge(n e), when known
  long stable_from = 0;
  std::optional<Rat> sample_at_horizon;  // gauge(H e)/H when finite
  bool samples_monotone_nonincreasing = false;
};

SlopeVerdict asymptotic_slope(const Gauge& g, const ExponentVector& e,
                              const EvalParams& p);

}  // namespace tate
