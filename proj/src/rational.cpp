#include "tate/rational.hpp"

namespace tate {

long padic_valuation_int(Int n, const Int& p) {
  if (n == 0) throw std::domain_error("padic_valuation_int: zero");
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

XRat padic_valuation(const Rat& x, const Int& p) {
  if (x == 0) return XRat::plus_inf();
  long vn = padic_valuation_int(boost::multiprecision::numerator(x), p);
  long vd = padic_valuation_int(boost::multiprecision::denominator(x), p);
  return XRat(Rat(vn - vd));
}

Int rat_floor(const Rat& x) {
  Int n = boost::multiprecision::numerator(x);
  Int d = boost::multiprecision::denominator(x);
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

}  // namespace tate
