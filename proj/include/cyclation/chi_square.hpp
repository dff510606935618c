#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cyclation/errors.hpp"

namespace cyclation {
namespace detail {

// Regularized incomplete gamma pair: series for P(a,x) when x < a+1,
// continued fraction (modified Lentz) for Q(a,x) otherwise.
inline double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double term = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw tolerance_error("incomplete gamma series did not converge");
}

inline double gamma_q_cfrac(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw tolerance_error("incomplete gamma continued fraction did not converge");
}

}  // namespace detail

// Upper tail Q(a, x) = Gamma(a,x)/Gamma(a).
inline double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw structure_error("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
  return detail::gamma_q_cfrac(a, x);
}

inline double chi_square_pvalue(double statistic, unsigned dof) {
  if (dof == 0) throw structure_error("chi_square_pvalue: zero degrees of freedom");
  return gamma_q(0.5 * dof, 0.5 * statistic);
}

struct ChiSquareResult {
  double statistic = 0.0;
  unsigned dof = 0;
  double p_value = 1.0;
  unsigned pooled_bins = 0;
};

namespace detail {

// Merge adjacent bins until each pooled expected count is >= 5; a deficient
// final group folds into its predecessor.
inline void pool_bins(const std::vector<double>& observed,
                      const std::vector<double>& expected,
                      std::vector<double>& obs_pooled,
                      std::vector<double>& exp_pooled) {
  double o = 0.0, e = 0.0;
  for (size_t i = 0; i < observed.size(); ++i) {
    o += observed[i];
    e += expected[i];
    if (e >= 5.0) {
      obs_pooled.push_back(o);
      exp_pooled.push_back(e);
      o = e = 0.0;
    }
  }
  if (e > 0.0 || o > 0.0) {
    if (exp_pooled.empty()) {
      obs_pooled.push_back(o);
      exp_pooled.push_back(e);
    } else {
      obs_pooled.back() += o;
      exp_pooled.back() += e;
    }
  }
}

}  // namespace detail

// Pearson test of observed counts against expected counts (same total).
inline ChiSquareResult chi_square_test(const std::vector<double>& observed,
                                       const std::vector<double>& expected) {
  if (observed.empty() || observed.size() != expected.size()) {
    throw structure_error("chi_square_test: empty or mismatched support");
  }
  std::vector<double> obs, exp;
  detail::pool_bins(observed, expected, obs, exp);
  if (obs.size() < 2) {
    throw structure_error("chi_square_test: support degenerates to one bin");
  }
  ChiSquareResult r;
  r.pooled_bins = static_cast<unsigned>(obs.size());
  for (size_t i = 0; i < obs.size(); ++i) {
    if (exp[i] <= 0.0) throw structure_error("chi_square_test: nonpositive expected mass");
    double d = obs[i] - exp[i];
    r.statistic += d * d / exp[i];
  }
  r.dof = r.pooled_bins - 1;
  r.p_value = chi_square_pvalue(r.statistic, r.dof);
  return r;
}

// Convenience: expected given as probabilities over the same support.
inline ChiSquareResult chi_square_test_probs(const std::vector<double>& observed,
                                             const std::vector<double>& probs,
                                             double reps) {
  std::vector<double> expected(probs.size());
  for (size_t i = 0; i < probs.size(); ++i) expected[i] = probs[i] * reps;
  return chi_square_test(observed, expected);
}

// Two-sample homogeneity test: expected counts from the pooled proportions.
// Bins are pre-pooled on the smaller sample's expected count.
inline ChiSquareResult chi_square_two_sample(const std::vector<double>& a,
                                             const std::vector<double>& b) {
  if (a.empty() || a.size() != b.size()) {
    throw structure_error("chi_square_two_sample: empty or mismatched support");
  }
  double na = 0.0, nb = 0.0;
  for (double v : a) na += v;
  for (double v : b) nb += v;
  if (na <= 0.0 || nb <= 0.0) throw structure_error("chi_square_two_sample: empty sample");
  double nmin = std::min(na, nb);
  std::vector<double> ref(a.size());
  for (size_t i = 0; i < a.size(); ++i) ref[i] = (a[i] + b[i]) * nmin / (na + nb);

  std::vector<double> ap, bp, rp;
  {
    double sa = 0.0, sb = 0.0, sr = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
      sa += a[i];
      sb += b[i];
      sr += ref[i];
      if (sr >= 5.0) {
        ap.push_back(sa);
        bp.push_back(sb);
        rp.push_back(sr);
        sa = sb = sr = 0.0;
      }
    }
    if ((sr > 0.0 || sa > 0.0 || sb > 0.0) && !rp.empty()) {
      ap.back() += sa;
      bp.back() += sb;
      rp.back() += sr;
    }
  }
  if (ap.size() < 2) {
    throw structure_error("chi_square_two_sample: support degenerates to one bin");
  }
  ChiSquareResult r;
  r.pooled_bins = static_cast<unsigned>(ap.size());
  for (size_t i = 0; i < ap.size(); ++i) {
    double pi = (ap[i] + bp[i]) / (na + nb);
    double ea = na * pi, eb = nb * pi;
    double da = ap[i] - ea, db = bp[i] - eb;
    r.statistic += da * da / ea + db * db / eb;
  }
  r.dof = r.pooled_bins - 1;
  r.p_value = chi_square_pvalue(r.statistic, r.dof);
  return r;
}

}  // namespace cyclation
