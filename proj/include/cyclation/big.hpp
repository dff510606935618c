#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace cyclation {

// Exact arbitrary-precision integer for counts.  All counting formulas in
// this library are evaluated in BigCount; doubles appear only at display or
// statistics boundaries.
using BigCount = boost::multiprecision::cpp_int;

// Exact rational, normalized (gcd-reduced, denominator > 0) by the backend.
using BigRational = boost::multiprecision::cpp_rational;

inline BigCount factorial(unsigned n) {
  BigCount r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// (2n-1)!! = (2n-1)(2n-3)...3*1, the number of pairings of 2n labels.
// n = 0 gives the empty product: (-1)!! = 1.
inline BigCount odd_double_factorial(unsigned n) {
  BigCount r = 1;
  for (unsigned i = 1; i <= n; ++i) r *= 2 * i - 1;
  return r;
}

inline BigCount pow2(unsigned k) { return BigCount(1) << k; }

// H_n = 1 + 1/2 + ... + 1/n as an exact rational; H_0 = 0.
inline BigRational harmonic_exact(unsigned n) {
  BigRational h = 0;
  for (unsigned i = 1; i <= n; ++i) h += BigRational(1, i);
  return h;
}

// Float harmonic number, summed small-to-large to keep rounding tame.
inline double harmonic_double(std::uint64_t n) {
  double h = 0.0;
  for (std::uint64_t i = n; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h;
}

// Quotient as double via an explicit 64-bit mantissa and ldexp, so ratios
// of astronomically large numerator/denominator never pass through inf/inf.
inline double to_double(const BigRational& q) {
  BigCount num = boost::multiprecision::numerator(q);
  const BigCount& den = boost::multiprecision::denominator(q);
  if (num == 0) return 0.0;
  bool neg = num < 0;
  if (neg) num = -num;
  std::ptrdiff_t e = static_cast<std::ptrdiff_t>(boost::multiprecision::msb(num)) -
                     static_cast<std::ptrdiff_t>(boost::multiprecision::msb(den));
  BigCount m;
  if (e <= 64) {
    m = (num << static_cast<unsigned>(64 - e)) / den;
  } else {
    m = num / (den << static_cast<unsigned>(e - 64));
  }
  double v = std::ldexp(m.convert_to<double>(), static_cast<int>(e) - 64);
  return neg ? -v : v;
}

inline double to_double(const BigCount& v) { return v.convert_to<double>(); }

// "num/den" form, e.g. "37/15"; integers print without the slash.
inline std::string rational_string(const BigRational& q) {
  if (boost::multiprecision::denominator(q) == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

}  // namespace cyclation
