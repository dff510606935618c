#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "cyclation/errors.hpp"

namespace cyclation {

// Controls for the half-line integrator.
struct QuadratureSpec {
  double abs_tol = 1e-10;        // absolute tolerance on the whole integral
  double upper_cutoff = 50.0;    // [cutoff, inf) handled by the analytic tail bound
  bool sqrt_substitution = true; // integrate f(u^2) 2u du to absorb x^(+-1/2) endpoint behavior
  int max_depth = 48;            // adaptive bisection depth per panel
  std::string scheme() const { return "adaptive-gauss-kronrod-7-15"; }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // accumulated panel estimates + tail bound
  std::int64_t evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1] (QUADPACK dqk15 constants).
inline constexpr std::array<double, 8> kGK15Nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
void gk15(const F& f, double a, double b, double& kronrod, double& err,
          std::int64_t& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kGK15Nodes[i]);
    fv[14 - i] = f(c + h * kGK15Nodes[i]);
  }
  fv[7] = f(c);
  evals += 15;
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double pair = (i == 7) ? fv[7] : fv[i] + fv[14 - i];
    resk += kKronrodWeights[i] * pair;
    if (i % 2 == 1) resg += kGaussWeights[i / 2] * pair;
  }
  // Odd Kronrod indices are the embedded Gauss-7 nodes.
  kronrod = resk * h;
  err = std::fabs((resk - resg) * h);
}

template <typename F>
double adaptive(const F& f, double a, double b, double tol, int depth,
                int max_depth, double& err_acc, std::int64_t& evals) {
  double whole, err;
  gk15(f, a, b, whole, err, evals);
  if (err <= tol || depth >= max_depth) {
    if (depth >= max_depth && err > tol)
      throw tolerance_error("quadrature: max depth " + std::to_string(max_depth) +
                            " reached on [" + std::to_string(a) + "," +
                            std::to_string(b) + "], panel error " +
                            std::to_string(err));
    err_acc += err;
    return whole;
  }
  const double m = 0.5 * (a + b);
  return adaptive(f, a, m, 0.5 * tol, depth + 1, max_depth, err_acc, evals) +
         adaptive(f, m, b, 0.5 * tol, depth + 1, max_depth, err_acc, evals);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integral of f over [a, b].
template <typename F>
QuadratureResult integrate(const F& f, double a, double b,
                           const QuadratureSpec& spec = {}) {
  QuadratureResult r;
  r.value = detail::adaptive(f, a, b, spec.abs_tol, 0, spec.max_depth,
                             r.error_estimate, r.evaluations);
  return r;
}

// Integral of f over [0, inf) for integrands decaying at least like e^{-x}
// with |f| <= tail_bound_scale * e^{-x} beyond the cutoff.  With
// sqrt_substitution the finite part is computed as int f(u^2) 2u du, which
// turns x^(+-1/2) endpoint behavior into a smooth integrand.
template <typename F>
QuadratureResult integrate_half_line(const F& f, const QuadratureSpec& spec = {},
                                     double tail_bound_scale = 2.0) {
  QuadratureResult r;
  if (spec.sqrt_substitution) {
    const double umax = std::sqrt(spec.upper_cutoff);
    auto g = [&f](double u) { return f(u * u) * 2.0 * u; };
    r = integrate(g, 0.0, umax, spec);
  } else {
    r = integrate(f, 0.0, spec.upper_cutoff, spec);
  }
  // Analytic bound on the discarded tail: int_cutoff^inf scale*e^{-x} dx.
  r.error_estimate += tail_bound_scale * std::exp(-spec.upper_cutoff);
  return r;
}

}  // namespace cyclation
