#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tate/topology.hpp"

namespace tate {

/// Localization of the ring at an invertible monomial t: A0 = R0[t],
/// B0 = R0[1/t], C0 = R0[t,1/t], S0 = A0 n B0 (phi is the identity since t
/// is already a unit).
struct LocalizationTriple {
  TateRingDesc base;
  ExponentVector t;
  GaugePtr gaugeA;
  GaugePtr gaugeB;
  GaugePtr gaugeC;
  GaugePtr gaugeS;
};

/// Throws std::invalid_argument when t is not an invertible monomial.
LocalizationTriple build_triple(const TateRingDesc& ring, const ExponentVector& t);

/// Pointwise dominance invariants (C <= A,B <= S and the base relations) on
/// a sample window; returns human-readable violations.
std::vector<std::string> triple_spot_checks(const LocalizationTriple& triple,
                                            long window, const EvalParams& p);

/// Lemma-"exact"(iii) criterion: pi^n (A0 n B0) subset R0, window-relative.
struct StrictnessResult {
  enum class Verdict { Holds, Fails, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  Rat n = 0;                               // Holds: sup of base - S over window
  std::vector<ExponentVector> witnesses;   // Fails: monomials with unbounded gap
  std::string detail;
};

StrictnessResult strictness_check(const LocalizationTriple& triple, long window,
                                  const EvalParams& p);

/// Monomial with finite base gauge vanishing on both cover pieces.
struct LocallyZeroSection {
  ExponentVector monomial;
  Rat base_gauge = 0;
  long certified_depth = 0;  // min of the A/B descent certificates
  bool nilpotent = false;    // some power vanishes exactly
  Tri topologically_nilpotent = Tri::Inconclusive;  // corollary check
};

std::vector<LocallyZeroSection> locally_zero_sections(
    const LocalizationTriple& triple, long window, const EvalParams& p);

/// Element of R / pi^N R0: representative with terms already inside
/// pi^N R0 dropped.
class TruncatedElement {
 public:
  TruncatedElement(RingElement rep, long precision, GaugePtr gauge)
      : rep_(std::move(rep)), precision_(precision), gauge_(std::move(gauge)) {}

  static TruncatedElement truncate(const RingElement& x, GaugePtr gauge,
                                   long precision, const EvalParams& p);

  const RingElement& representative() const { return rep_; }
  long precision() const { return precision_; }
  const GaugePtr& gauge() const { return gauge_; }

  /// Same class mod pi^N R0 (three-valued via membership of the difference).
  Tri equivalent(const TruncatedElement& o, const EvalParams& p) const;

 private:
  RingElement rep_;
  long precision_;
  GaugePtr gauge_;
};

/// Exactness bookkeeping for 0 -> R -> A + B -> C with eps(x) = (x, x) and
/// delta(a, b) = b - a.
struct CechSequenceReport {
  bool complex_identity = false;  // delta(eps(x)) == 0 exactly
  bool split_identity = false;    // delta(0, x) == x exactly
  Tri x_zero_in_R = Tri::Inconclusive;  // x in pi^N R0?
  bool x_zero_in_A_to_horizon = false;  // x in pi^M A0 for all M <= horizon
  bool x_zero_in_B_to_horizon = false;
  bool injectivity_failure = false;  // nonzero in R-hat, zero in A-hat, B-hat
  long precision = 0;
};

CechSequenceReport cech_sequence_check(const LocalizationTriple& triple,
                                       const RingElement& x, long precision,
                                       const EvalParams& p);

/// Coefficient-extraction family rho_n indexed by n >= 1: rho_n reads the
/// coefficient of member(n), and rho_n(pi^M R0) has valuation
/// >= M + base_gauge(member(n)).
struct SeparatingFunctional {
  std::function<ExponentVector(long)> member;
};

/// Series prescription sum_n term(n) with the tail guarantee
/// term(n) in pi^n A0 (resp. B0) making every truncation finite.
struct SeriesSpec {
  std::function<RingElement(long)> term;
};

struct GlueingCertificate {
  bool obstruction = false;
  long precision = 0;
  bool truncations_agree = false;  // a = b in C-hat at the given precision
  // n <= horizon where the functional value is too big to come from a
  // precision-M preimage: v(rho_n(a)) < M + gauge(member(n))
  std::vector<long> blocked_indices;
  std::string detail;
};

/// Certifies that no element of R-hat restricts to (a, b) at precision M,
/// for tails supported on the functional's monomials: the certificate needs
/// every index n <= horizon blocked (a convergent preimage would need its
/// member(n)-coefficients to tend to zero).
/// Throws std::invalid_argument when a tail guarantee fails.
GlueingCertificate glueing_obstruction(const LocalizationTriple& triple,
                                       const SeriesSpec& a_spec,
                                       const SeriesSpec& b_spec,
                                       const SeparatingFunctional& functional,
                                       long precision, const EvalParams& p);

/// Homogeneous relation t_i^{d} r = g(t_1, ..., t_k), g with coefficients
/// in R0 and every term of total degree d.
struct AlainRelation {
  std::size_t i = 0;
  long d = 0;
  struct Term {
    RingElement coeff;
    std::vector<long> degs;
  };
  std::vector<Term> terms;
};

/// Explicit power-boundedness bound: pi^{N(A+B)} r^m in R0.
struct AlainCertificate {
  bool valid = false;
  long A = 0;         // minimal A with pi^A t_i in R0 for all i
  long B = 0;         // minimal B with pi^B a_i in R0 for all i
  long N = 0;         // sum of relation degrees
  long exponent = 0;  // N (A + B)
  Tri powers_ok = Tri::Inconclusive;
  std::string detail;
};

/// Requires sum a_i t_i = 1 exactly and every relation to verify exactly
/// (std::invalid_argument otherwise); A and B by membership search.
AlainCertificate alain_bound(const TateRingDesc& ring,
                             const std::vector<RingElement>& t_list,
                             const std::vector<RingElement>& a_list,
                             const RingElement& r,
                             const std::vector<AlainRelation>& relations,
                             const EvalParams& p);

/// Minimal B with pi^B a_i power-bounded for all i, and the Laurent-cover
/// scaling exponent -(B+1).
struct LaurentConstant {
  Tri found = Tri::Inconclusive;
  long B = 0;
  long c_exponent = 0;
};

LaurentConstant laurent_constant(const TateRingDesc& ring,
                                 const std::vector<RingElement>& t_list,
                                 const std::vector<RingElement>& a_list,
                                 const EvalParams& p);

/// Additive monomial valuation: lambda x^e maps to v(lambda) pi_value +
/// sum e_i w_i; positive exponents of nilpotent variables give +inf.
struct ValuationSample {
  Rat pi_value = 1;  // must be > 0 (continuity)
  std::map<std::string, Rat> weights;
};

XRat valuation_sample(const TateRingDesc& ring, const ValuationSample& sample,
                      const RingElement& x);

enum class CoverPiece { U, V };  // U: |t| <= 1 (v(t) >= 0); V: |t| >= 1

bool cover_membership(const TateRingDesc& ring, const ValuationSample& sample,
                      const ExponentVector& t, CoverPiece piece);

}  // namespace tate
