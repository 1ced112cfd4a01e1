#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tate/gauge.hpp"

namespace tate {

/// A monomially presented Tate ring: variables, the gauge cutting out the
/// ring of definition, and the canonical (full exponent-lattice) grading.
struct TateRingDesc {
  std::string name;
  VarTablePtr table;
  GaugePtr gauge;
  Grading grading;

  static TateRingDesc make(std::string name, VarTablePtr table, GaugePtr gauge) {
    TateRingDesc r;
    r.name = std::move(name);
    r.table = std::move(table);
    r.gauge = std::move(gauge);
    r.grading = Grading::canonical(*r.table);
    return r;
  }
};

/// All declaration-valid integer monomials with |e_i| <= window
/// (non-invertible variables scan [0, window], capped ones [0, cap)).
std::vector<ExponentVector> monomial_window(const VarTablePtr& table, long window);

/// Spot-checks of the ring-of-definition axioms on a sample window:
/// gauge(1) <= 0 and subadditivity gauge(e+f) <= gauge(e)+gauge(f) wherever
/// both sides are exact.  Returns human-readable violations (empty = pass).
std::vector<std::string> construction_spot_checks(const TateRingDesc& ring,
                                                  long window,
                                                  const EvalParams& p);

/// Why an element is (or is not) power-bounded.
struct BoundednessWitness {
  enum class Kind {
    None,
    NilpotentPower,   // x^power == 0 exactly
    SlopeViolation,   // term coeff*x^e with v(coeff) + slope < 0, or -inf rate
    Family            // x^k in pi^{-n} A0 for all k, via x^period in A0
  };
  Kind kind = Kind::None;
  long power = 0;       // NilpotentPower / Family period
  long n = 0;           // Family bound
  std::optional<ExponentVector> term;
  std::optional<Rat> total_slope;  // v(coeff) + gauge slope along the term
};

struct BoundednessResult {
  Tri verdict = Tri::Inconclusive;
  BoundednessWitness witness;
};

/// Is {x^k : k >= 1} bounded, i.e. contained in some pi^{-n} A0?
/// Yes-certificates are exact; no-certificates come from exact slope
/// analysis of single terms (sound for monomial gauges, which are graded
/// for the canonical grading).
BoundednessResult power_bounded(const RingElement& x, const TateRingDesc& ring,
                                const EvalParams& p);

/// Does x^k -> 0?  Yes iff some power vanishes, or x is power-bounded and
/// some power lands in pi * A0.  No when x is certifiably unbounded or a
/// term has exact non-positive total slope.
BoundednessResult topologically_nilpotent(const RingElement& x,
                                          const TateRingDesc& ring,
                                          const EvalParams& p);

/// Uniformity scan over the monomial window |e_i| <= window.
struct UniformityResult {
  enum class Verdict { Uniform, NonUniform, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  long n = 0;  // Uniform: R^o subset pi^{-n} R0, over the window
  std::optional<ExponentVector> witness;  // NonUniform: k x^e line in R^o
  std::optional<Rat> witness_gauge;
  std::string detail;
};

/// Uniform iff sup over power-bounded monomials of (gauge(e) - v_min(e)) is
/// finite, where v_min(e) is the least coefficient valuation keeping
/// coeff * x^e power-bounded.  A finite-gauge monomial with v_min = -inf
/// (a whole line k x^e inside R^o) certifies non-uniformity.
UniformityResult uniformity(const TateRingDesc& ring, long window,
                            const EvalParams& p);

}  // namespace tate
