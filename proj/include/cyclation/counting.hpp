#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "cyclation/big.hpp"
#include "cyclation/cycle_type.hpp"
#include "cyclation/errors.hpp"

namespace cyclation {

// Row n of the unsigned Stirling numbers of the first kind: r[k] = [n k],
// the number of n-permutations with k cycles (r[0] = [n 0], zero for n > 0).
// Triangular recurrence [n k] = [n-1 k-1] + (n-1)[n-1 k].
inline std::vector<BigCount> stirling_first_row(unsigned n) {
  std::vector<BigCount> row{BigCount(1)};  // [0 0] = 1
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<BigCount> next(m + 1, BigCount(0));
    for (unsigned k = 1; k <= m; ++k) {
      next[k] = row[k - 1];
      if (k < m) next[k] += BigCount(m - 1) * row[k];
    }
    row = std::move(next);
  }
  return row;
}

inline BigCount stirling_first(unsigned n, unsigned k) {
  if (k > n) return 0;
  return stirling_first_row(n)[k];
}

// Number of n-cyclations with k cycles: 2^(n-k) [n k].
inline BigCount cyclation_count(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n == 0) return 1;  // the empty cyclation has zero cycles
  if (k == 0) return 0;
  return pow2(n - k) * stirling_first(n, k);
}

inline std::vector<BigCount> cyclation_count_row(unsigned n) {
  std::vector<BigCount> row = stirling_first_row(n);
  for (unsigned k = 0; k <= n; ++k)
    if (row[k] != 0) row[k] *= pow2(n - k);
  return row;
}

// Coefficients of x(x+s)(x+2s)...(x+(n-1)s), indexed by power of x.
// s = 1 reproduces the Stirling row, s = 2 the cyclation row; kept as an
// independent cross-check path against the recurrence above.
inline std::vector<BigCount> rising_product_coeffs(unsigned n, unsigned step) {
  std::vector<BigCount> coeff{BigCount(1)};  // empty product
  for (unsigned m = 0; m < n; ++m) {
    // multiply by (x + m*step)
    std::vector<BigCount> next(coeff.size() + 1, BigCount(0));
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      next[i + 1] += coeff[i];
      next[i] += BigCount(m) * BigCount(step) * coeff[i];
    }
    coeff = std::move(next);
  }
  return coeff;
}

namespace detail {

inline void require_valid_type(const CycleType& t, std::uint64_t n) {
  if (t.weight() != n)
    throw structure_error("cycle type " + t.str() + " has weight " +
                          std::to_string(t.weight()) + ", expected " +
                          std::to_string(n));
}

}  // namespace detail

// Size of the conjugacy class of n-permutations with cycle type t:
//   n! / prod_l l^{i_l} i_l!
inline BigCount perm_class_size(const CycleType& t) {
  const std::uint64_t n = t.weight();
  BigCount denom = 1;
  const auto& c = t.counts();
  for (std::size_t l = 1; l <= c.size(); ++l) {
    for (std::uint32_t j = 0; j < c[l - 1]; ++j) denom *= BigCount(l) * (j + 1);
  }
  return factorial(static_cast<unsigned>(n)) / denom;
}

inline BigCount perm_class_size_checked(const CycleType& t, std::uint64_t n) {
  detail::require_valid_type(t, n);
  return perm_class_size(t);
}

// Number of n-cyclations with cycle type t:
//   n! 2^n / prod_l (2l)^{i_l} i_l!
// Summed over all types of weight n this gives (2n-1)!!.
inline BigCount cyc_class_size(const CycleType& t) {
  const std::uint64_t n = t.weight();
  BigCount denom = 1;
  const auto& c = t.counts();
  for (std::size_t l = 1; l <= c.size(); ++l) {
    for (std::uint32_t j = 0; j < c[l - 1]; ++j)
      denom *= BigCount(2 * l) * (j + 1);
  }
  return factorial(static_cast<unsigned>(n)) * pow2(static_cast<unsigned>(n)) /
         denom;
}

inline BigCount cyc_class_size_checked(const CycleType& t, std::uint64_t n) {
  detail::require_valid_type(t, n);
  return cyc_class_size(t);
}

// Multiplicity-vector variants used by enumeration loops (avoids building a
// CycleType per partition).
inline BigCount cyc_class_size(unsigned n, const std::vector<std::uint32_t>& mult) {
  BigCount denom = 1;
  for (std::size_t l = 1; l <= mult.size(); ++l)
    for (std::uint32_t j = 0; j < mult[l - 1]; ++j)
      denom *= BigCount(2 * l) * (j + 1);
  return factorial(n) * pow2(n) / denom;
}

inline BigCount perm_class_size(unsigned n, const std::vector<std::uint32_t>& mult) {
  BigCount denom = 1;
  for (std::size_t l = 1; l <= mult.size(); ++l)
    for (std::uint32_t j = 0; j < mult[l - 1]; ++j) denom *= BigCount(l) * (j + 1);
  return factorial(n) / denom;
}

struct SingleCycleProb {
  BigRational exact;   // 2^{n-1}(n-1)! / (2n-1)!!
  double asymptote;    // (1/2) sqrt(pi/n)
};

// Probability that a random n-cyclation is a single cycle.
inline SingleCycleProb single_cycle_prob(unsigned n) {
  if (n == 0) throw structure_error("single_cycle_prob requires n >= 1");
  SingleCycleProb r;
  r.exact = BigRational(pow2(n - 1) * factorial(n - 1), odd_double_factorial(n));
  r.asymptote = 0.5 * std::sqrt(3.14159265358979323846 / static_cast<double>(n));
  return r;
}

}  // namespace cyclation
