#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <string>

namespace tate {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Extended rational: a finite exact value, +inf or -inf.
/// Used for p-adic valuations (valuation(0) = +inf) and gauge values
/// (+inf = monomial outside the ring, -inf = topologically zero).
class XRat {
 public:
  enum class Kind { Finite, PlusInf, MinusInf };

  XRat() : kind_(Kind::Finite), value_(0) {}
  XRat(Rat v) : kind_(Kind::Finite), value_(std::move(v)) {}
  XRat(long v) : kind_(Kind::Finite), value_(v) {}
  XRat(int v) : kind_(Kind::Finite), value_(v) {}

  static XRat plus_inf() { return XRat(Kind::PlusInf); }
  static XRat minus_inf() { return XRat(Kind::MinusInf); }

  bool finite() const { return kind_ == Kind::Finite; }
  bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
  bool is_minus_inf() const { return kind_ == Kind::MinusInf; }

  const Rat& value() const {
    if (!finite()) throw std::domain_error("XRat: value() on infinite value");
    return value_;
  }

  XRat operator+(const XRat& o) const {
    if (is_plus_inf() || o.is_plus_inf()) {
      if (is_minus_inf() || o.is_minus_inf())
        throw std::domain_error("XRat: inf - inf");
      return plus_inf();
    }
    if (is_minus_inf() || o.is_minus_inf()) return minus_inf();
    return XRat(value_ + o.value_);
  }
  XRat operator-() const {
    if (is_plus_inf()) return minus_inf();
    if (is_minus_inf()) return plus_inf();
    return XRat(-value_);
  }
  XRat operator-(const XRat& o) const { return *this + (-o); }

  friend bool operator==(const XRat& a, const XRat& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.finite() || a.value_ == b.value_;
  }
  friend bool operator<(const XRat& a, const XRat& b) {
    if (a.kind_ == b.kind_) return a.finite() && a.value_ < b.value_;
    if (a.is_minus_inf()) return true;
    if (b.is_minus_inf()) return false;
    return b.is_plus_inf();
  }
  friend bool operator<=(const XRat& a, const XRat& b) { return a < b || a == b; }
  friend bool operator>(const XRat& a, const XRat& b) { return b < a; }
  friend bool operator>=(const XRat& a, const XRat& b) { return b <= a; }

  std::string str() const {
    if (is_plus_inf()) return "+inf";
    if (is_minus_inf()) return "-inf";
    return value_.str();
  }

 private:
  explicit XRat(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rat value_;
};

inline XRat min(const XRat& a, const XRat& b) { return a < b ? a : b; }
inline XRat max(const XRat& a, const XRat& b) { return a < b ? b : a; }

/// Exact p-adic valuation of a rational: v(p^k u) = k for units u,
/// v(0) = +inf.  Exactness of coefficient arithmetic lives in Rat itself;
/// this is the only place the prime enters coefficient-level reasoning.
XRat padic_valuation(const Rat& x, const Int& p);

/// Exponent of p in a nonzero integer.
long padic_valuation_int(Int n, const Int& p);

/// ceil of a rational, as an Int.
Int rat_ceil(const Rat& x);
Int rat_floor(const Rat& x);

}  // namespace tate
