#pragma once

#include <cmath>

#include "cyclation/expint.hpp"
#include "cyclation/quadrature.hpp"

namespace cyclation {

// int_0^inf exp(-E(x)/2 - x) dx: the coefficient of n in the expected
// longest cycle length of a random n-cyclation.  Near 0 the integrand
// behaves like e^{gamma/2} sqrt(x); the u^2 substitution makes it smooth.
inline QuadratureResult longest_cycle_constant(const QuadratureSpec& spec = {}) {
  return integrate_half_line(
      [](double x) { return std::exp(-0.5 * expint_e1(x) - x); }, spec, 2.0);
}

// Permutation analog (exponent not halved): the Golomb-Dickman constant
// int_0^inf exp(-E(x) - x) dx.
inline QuadratureResult longest_perm_constant(const QuadratureSpec& spec = {}) {
  return integrate_half_line(
      [](double x) { return std::exp(-expint_e1(x) - x); }, spec, 2.0);
}

// (sqrt(pi)/2) int_0^inf exp(E(x)/2 - x) dx: the coefficient of sqrt(n) in
// the expected shortest cycle length of a random n-cyclation.  The
// integrand has an integrable e^{-gamma/2}/sqrt(x) singularity at 0,
// absorbed by the u^2 substitution.
inline QuadratureResult shortest_cycle_constant(QuadratureSpec spec = {}) {
  spec.sqrt_substitution = true;
  QuadratureResult r = integrate_half_line(
      [](double x) { return std::exp(0.5 * expint_e1(x) - x); }, spec, 2.0);
  const double scale = 0.5 * std::sqrt(3.14159265358979323846);
  r.value *= scale;
  r.error_estimate *= scale;
  return r;
}

// Permutation analog: the shortest-cycle coefficient e^{-gamma}
// (Ex[S_n] ~ e^{-gamma} log n).  Returned from the stored gamma literal.
inline double shortest_perm_coefficient() { return std::exp(-kEulerGamma); }

// The named asymptotic constants, with quadrature error estimates.
struct Constants {
  double gamma = 0.0;
  double longest_cyc = 0.0;        // 0.7578...
  double longest_cyc_err = 0.0;
  double shortest_cyc = 0.0;       // 1.4572...
  double shortest_cyc_err = 0.0;
  double longest_perm = 0.0;       // 0.6243... (Golomb-Dickman)
  double longest_perm_err = 0.0;
  double shortest_perm_coeff = 0.0;  // e^{-gamma} = 0.5614...
};

inline Constants compute_constants(const QuadratureSpec& spec = {}) {
  Constants c;
  c.gamma = kEulerGamma;
  auto lm = longest_cycle_constant(spec);
  c.longest_cyc = lm.value;
  c.longest_cyc_err = lm.error_estimate;
  auto st = shortest_cycle_constant(spec);
  c.shortest_cyc = st.value;
  c.shortest_cyc_err = st.error_estimate;
  auto lp = longest_perm_constant(spec);
  c.longest_perm = lp.value;
  c.longest_perm_err = lp.error_estimate;
  c.shortest_perm_coeff = shortest_perm_coefficient();
  return c;
}

}  // namespace cyclation
