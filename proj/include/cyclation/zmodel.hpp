#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cyclation/cycle_type.hpp"
#include "cyclation/errors.hpp"
#include "cyclation/exact_dist.hpp"
#include "cyclation/expint.hpp"
#include "cyclation/rng.hpp"

namespace cyclation {

namespace detail {

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace detail

// Poissonization parameter z with the partial sums t_l = sum_{m<l} z^m/2m
// cached up front (t_1 = 0).  The cache stops once terms drop below 1e-18;
// queries past it continue the series on the fly.
class ZParams {
 public:
  explicit ZParams(double z) : z_(z) {
    if (!(z > 0.0 && z < 1.0)) throw structure_error("ZParams: z must lie in (0,1)");
    t_inf_ = -0.5 * std::log1p(-z);
    t_.push_back(0.0);  // index 0 unused
    t_.push_back(0.0);  // t_1
    detail::KahanSum acc;
    double zpow = 1.0;
    static const size_t kMaxCache = 4'000'000;
    for (uint64_t m = 1; t_.size() < kMaxCache; ++m) {
      zpow *= z_;
      double term = zpow / (2.0 * static_cast<double>(m));
      acc.add(term);
      t_.push_back(acc.sum);
      if (term < 1e-18) break;
    }
  }

  double z() const { return z_; }
  double t_inf() const { return t_inf_; }

  double t(uint64_t l) const {
    if (l < 1) throw structure_error("ZParams::t: l must be >= 1");
    if (l < t_.size()) return t_[l];
    uint64_t edge = t_.size() - 1;
    double sum = t_.back();
    double zpow = std::pow(z_, static_cast<double>(edge));
    for (uint64_t m = edge; m < l; ++m) {
      sum += zpow / (2.0 * static_cast<double>(m));
      zpow *= z_;
    }
    return sum;
  }

  size_t cached_levels() const { return t_.size() - 1; }

 private:
  double z_;
  double t_inf_;
  std::vector<double> t_;
};

struct ZDraw {
  CycleType cycle_type;
  uint64_t nu = 0;
  uint64_t kappa = 0;
};

inline bool zdraw_consistent(const ZDraw& d) {
  return d.cycle_type.weight() == d.nu && d.cycle_type.cycle_count() == d.kappa;
}

// Pr[nu = n] = (1-z)^{1/2} z^n C(2n,n)/4^n.  The square root is taken
// directly (not through t_inf) so the nu=0 value is an independent
// expression from the Poisson void probability e^{-t_inf}.
inline double nu_pmf(const ZParams& zp, uint64_t n) {
  double root = std::sqrt(1.0 - zp.z());
  if (n == 0) return root;
  double dn = static_cast<double>(n);
  double lg = dn * std::log(zp.z()) + std::lgamma(2.0 * dn + 1.0) -
              2.0 * std::lgamma(dn + 1.0) - dn * std::log(4.0);
  return root * std::exp(lg);
}

// Draws the full cycle structure: kappa ~ Poisson(t_inf), then kappa iid
// lengths with Pr[l] = z^l/(2l t_inf).  Equivalent in law to the
// independent-Poisson-per-length model, with no truncation.  Lengths use an
// inversion table to the 1 - 1e-12 quantile; past it, a geometric proposal
// l = L+1+G with acceptance (L+1)/l samples the exact conditional tail.
class ZSampler {
 public:
  explicit ZSampler(const ZParams& zp) : zp_(zp) {
    double total = zp_.t_inf();
    detail::KahanSum acc;
    double zpow = 1.0;
    static const size_t kMaxTable = 4'000'000;
    for (uint64_t l = 1; cum_.size() < kMaxTable; ++l) {
      zpow *= zp_.z();
      acc.add(zpow / (2.0 * static_cast<double>(l) * total));
      cum_.push_back(acc.sum);
      if (1.0 - acc.sum < 1e-12) break;
    }
    // truncation level for the per-length cross-check path: residual Poisson
    // mass below 1e-15
    double z = zp_.z();
    per_level_trunc_ = 1;
    zpow = z;
    while (zpow / (2.0 * per_level_trunc_ * (1.0 - z)) > 1e-15 &&
           per_level_trunc_ < kMaxTable) {
      ++per_level_trunc_;
      zpow *= z;
    }
  }

  uint64_t sample_length(Rng& rng) const {
    double u = rng.next_real();
    if (u <= cum_.back()) {
      size_t idx = std::lower_bound(cum_.begin(), cum_.end(), u) - cum_.begin();
      return idx + 1;
    }
    const uint64_t L = cum_.size();
    const double logz = std::log(zp_.z());
    for (;;) {
      uint64_t g = static_cast<uint64_t>(std::floor(std::log(rng.next_real()) / logz));
      uint64_t l = L + 1 + g;
      if (rng.next_real() * static_cast<double>(l) <= static_cast<double>(L + 1)) return l;
    }
  }

  ZDraw draw(Rng& rng) const {
    uint64_t kappa = rng.next_poisson(zp_.t_inf());
    std::vector<unsigned> lengths(kappa);
    for (auto& l : lengths) l = checked_length(sample_length(rng));
    return assemble(lengths);
  }

  // Cross-check path: independent Poisson counts per length l = 1..trunc,
  // where the discarded Poisson mass is below 1e-15.
  ZDraw draw_per_level(Rng& rng) const {
    std::vector<unsigned> lengths;
    double zpow = 1.0;
    for (uint64_t l = 1; l <= per_level_trunc_; ++l) {
      zpow *= zp_.z();
      uint64_t c = rng.next_poisson(zpow / (2.0 * static_cast<double>(l)));
      for (uint64_t i = 0; i < c; ++i) lengths.push_back(static_cast<unsigned>(l));
    }
    return assemble(lengths);
  }

  const ZParams& params() const { return zp_; }

 private:
  static unsigned checked_length(uint64_t l) {
    if (l > 100'000'000) throw resource_error("z draw exceeded the supported cycle length");
    return static_cast<unsigned>(l);
  }

  ZDraw assemble(const std::vector<unsigned>& lengths) const {
    ZDraw d;
    d.kappa = lengths.size();
    for (unsigned l : lengths) d.nu += l;
    d.cycle_type = CycleType::from_lengths(lengths);
    return d;
  }

  ZParams zp_;
  std::vector<double> cum_;
  uint64_t per_level_trunc_ = 1;
};

enum class Extreme { kLongest, kShortest };

// Pr[M_z = l] = e^{-(t_inf - t_{l+1})} - e^{-(t_inf - t_l)};
// Pr[T_z = l] = e^{-t_l} - e^{-t_{l+1}}.  Both laws are defective: the
// missing mass (1-z)^{1/2} is the no-cycle event.
inline double extreme_pmf_z(const ZParams& zp, Extreme which, uint64_t l) {
  if (l < 1) throw structure_error("extreme_pmf_z: l must be >= 1");
  double ti = zp.t_inf();
  if (which == Extreme::kLongest) {
    return std::exp(-(ti - zp.t(l + 1))) - std::exp(-(ti - zp.t(l)));
  }
  return std::exp(-zp.t(l)) - std::exp(-zp.t(l + 1));
}

// Ex via tail sums: Ex[M_z] = sum_l (1 - e^{-(t_inf - t_l)}),
// Ex[T_z] = sum_l (e^{-t_l} - e^{-t_inf}).  Both term families are bounded
// by t_inf - t_l <= z^l/(2l(1-z)), so the remainder after L terms is below
// z^{L+1}/(2(L+1)(1-z)^2); summation stops once that certifies 1e-10
// relative truncation error.
inline double ex_extreme_z(const ZParams& zp, Extreme which) {
  const double ti = zp.t_inf();
  const double z = zp.z();
  const double e_ti = std::exp(-ti);
  detail::KahanSum acc;
  double znext = z * z;  // z^{l+1}
  static const uint64_t kGuard = 50'000'000;
  for (uint64_t l = 1; l <= kGuard; ++l) {
    double term = which == Extreme::kLongest ? -std::expm1(-(ti - zp.t(l)))
                                             : std::exp(-zp.t(l)) - e_ti;
    acc.add(term);
    double bound = znext / (2.0 * static_cast<double>(l + 1) * (1.0 - z) * (1.0 - z));
    if (bound <= 1e-10 * acc.sum) return acc.sum;
    znext *= z;
  }
  throw tolerance_error("ex_extreme_z: tail bound failed to certify 1e-10");
}

struct TelescopeGaps {
  double max_partial_gap = 0.0;  // explicit partial sums vs closed forms
  double total_gap = 0.0;        // full sum vs 1 - sqrt(1-z)
};

// Sums the extreme pmf term by term (compensated) and compares partial sums
// against their closed exponential forms, and the total against the
// defective-law mass 1 - sqrt(1-z).
inline TelescopeGaps telescope_extreme(const ZParams& zp, Extreme which) {
  const double ti = zp.t_inf();
  detail::KahanSum acc;
  TelescopeGaps gaps;
  static const uint64_t kGuard = 4'000'000;
  uint64_t l = 1;
  for (; l <= kGuard; ++l) {
    double term = extreme_pmf_z(zp, which, l);
    acc.add(term);
    double closed = which == Extreme::kLongest
                        ? std::exp(-(ti - zp.t(l + 1))) - std::exp(-ti)
                        : 1.0 - std::exp(-zp.t(l + 1));
    gaps.max_partial_gap = std::max(gaps.max_partial_gap, std::abs(acc.sum - closed));
    if (term < 1e-18 && l > 4) break;
  }
  gaps.total_gap = std::abs(acc.sum - (1.0 - std::sqrt(1.0 - zp.z())));
  return gaps;
}

// Root of E(x_l) = 2(t_inf - t_l), bisected inside the bracket
// (-(l-1)log z, -l log z) to width 1e-14, then one secant polish.
inline double solve_xl(const ZParams& zp, uint64_t l) {
  if (l < 1) throw structure_error("solve_xl: l must be >= 1");
  const double target = 2.0 * (zp.t_inf() - zp.t(l));
  const double logz = std::log(zp.z());
  double lo = l == 1 ? 1e-300 : -static_cast<double>(l - 1) * logz;
  double hi = -static_cast<double>(l) * logz;
  auto g = [&](double x) { return expint_e1(x) - target; };
  double glo = g(lo), ghi = g(hi);
  if (glo <= 0.0) return lo;
  if (ghi >= 0.0) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double gm = g(mid);
    if (gm > 0.0) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
      ghi = gm;
    }
  }
  double denom = ghi - glo;
  if (denom == 0.0) return 0.5 * (lo + hi);
  double x = lo - glo * (hi - lo) / denom;
  return std::min(std::max(x, lo), hi);
}

// |Ex[extreme_z] - sum_{n<=N} Pr[nu=n] Ex[extreme_n]| with the exact finite-n
// expectations; the residual is the nu-tail mass times a linear bound.
inline double mixture_identity_check(const ZParams& zp, Extreme which, unsigned n_trunc,
                                     unsigned cap = kDefaultPartitionCap) {
  detail::KahanSum mix;
  for (unsigned n = 1; n <= n_trunc; ++n) {
    ExactDistributions d = exact_distributions(n, cap);
    const BigRational& ex = which == Extreme::kLongest ? d.ex_m : d.ex_t;
    mix.add(nu_pmf(zp, n) * to_double(ex));
  }
  return std::abs(ex_extreme_z(zp, which) - mix.sum);
}

}  // namespace cyclation
