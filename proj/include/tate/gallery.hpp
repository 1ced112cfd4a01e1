#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tate/cech.hpp"
#include "tate/report.hpp"

namespace tate {

/// The example rings: ex41..ex46 are the six numbered constructions,
/// flat_laurent is the Laurent-polynomial control ring with gauge 0.
enum class ExampleId { Ex41, Ex42, Ex43, Ex44, Ex45, Ex46, FlatLaurent };

std::string example_name(ExampleId id);
std::optional<ExampleId> example_from_name(const std::string& name);
std::vector<ExampleId> all_examples();

struct GalleryParams {
  Int prime = 2;
  long depth = 3;   // ex43 recursion depth K
  long zvars = 3;   // ex44 number of Z variables
};

/// Minimal recursive sequences a(1..K), b(1..K) with
///   a(1) = 1,
///   b(J) > J^2 + J max{b(j): j<J, a(i): i<=J},
///   a(I) > I^2 + I max{b(j): j<I, a(i): i<I},
/// each entry the least integer satisfying its inequality, built in the
/// order a(1), b(1), a(2), b(2), ...
struct SequencePair {
  std::vector<long> a, b;
};

SequencePair build_sequences(long K);

struct GalleryRing {
  TateRingDesc ring;
  ExponentVector t;  // designated localization parameter
  // adjunctions applied before localizing (ex46's subspace step: P, Q)
  std::vector<DerivedGauge::Adjunction> pre_adjoin;
  GalleryParams params;
};

GalleryRing build_example(ExampleId id, const GalleryParams& prm = {});

/// The ring actually localized at t: the base ring, except after the
/// pre-adjunction step when one is present.
TateRingDesc localization_base(const GalleryRing& g);

/// Machine checks of the example's headline assertions; horizon <= 0 picks
/// the example's natural depth.
Report verify_proposition(ExampleId id, long horizon, long precision);

/// Explicit-bound certificates (alain_bound fixtures, laurent_constant,
/// uniform-implies-strict coherence across the gallery).
Report verify_positive_criteria(long horizon);

}  // namespace tate
