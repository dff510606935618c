#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "cyclation/errors.hpp"

namespace cyclation {

// Euler's constant, independent of the expint implementation it validates.
// OEIS A001620, 20 digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

namespace detail {

// Power series E1(x) = -gamma - log x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
// (Abramowitz & Stegun 5.1.11).  Accurate for small x; mild cancellation
// keeps it below ~1e-13 relative up to the crossover.
inline double expint_e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= -x / k;
    const double add = -term / k;
    sum += add;
    if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
  }
  return sum - kEulerGamma - std::log(x);
}

// Continued fraction E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...)))
// (A&S 5.1.22 in even form), evaluated by the modified Lentz algorithm.
// Converges quickly for x above ~1.
inline double expint_e1_cfrac(double x) {
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 200; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(-x) * h;
}

// Both paths meet 1e-12 relative here; covered by an agreement test on the
// surrounding neighborhood.
inline constexpr double kExpintCrossover = 1.5;

}  // namespace detail

// Exponential integral E(x) = E1(x) = int_x^inf e^{-y}/y dy = Gamma(0, x),
// for x > 0.  Relative error <= 1e-12 over the positive axis.
inline double expint_e1(double x) {
  if (!(x > 0.0))
    throw structure_error("expint_e1: x must be > 0 (logarithmic singularity at 0), got " +
                          std::to_string(x));
  if (x <= detail::kExpintCrossover) return detail::expint_e1_series(x);
  if (x > 700.0) return 0.0;  // below double underflow of e^{-x}/x
  return detail::expint_e1_cfrac(x);
}

}  // namespace cyclation
