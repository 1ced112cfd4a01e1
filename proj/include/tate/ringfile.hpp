#pragma once

#include <stdexcept>
#include <string>

#include "tate/topology.hpp"

namespace tate {

struct RingParseError : std::runtime_error {
  RingParseError(const std::string& msg, long line, long col)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(col)),
        line(line),
        col(col) {}
  long line;
  long col;
};

/// Text ring definition with sections [field], [vars], [gauge] and an
/// optional [adjoin]; see README for the grammar.  The emitted form is
/// canonical: emit(parse(emit(r))) == emit(r) byte for byte.
TateRingDesc parse_ring_text(const std::string& text,
                             const std::string& name = "ring");
TateRingDesc parse_ring_file(const std::string& path);
std::string emit_ring(const TateRingDesc& ring);

/// Command-line monomial: whitespace-separated `name^exp` factors with
/// rational exponents `a/b`, or `1` for the unit monomial.
ExponentVector parse_monomial(const std::string& s, const VarTablePtr& table);

/// Sum of terms `coeff monomial` joined by `+`; coefficients are rationals
/// or `p^k` powers of the model prime, defaulting to 1.
RingElement parse_element(const std::string& s, const VarTablePtr& table);

}  // namespace tate
