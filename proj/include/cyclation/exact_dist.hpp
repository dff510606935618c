#pragma once

#include <cstdint>
#include <vector>

#include "cyclation/big.hpp"
#include "cyclation/counting.hpp"
#include "cyclation/partitions.hpp"

namespace cyclation {

// Exact pmf on support {1..n}, stored as integer numerators over one common
// denominator (no per-entry gcd reduction; reduce only on demand).
struct ExactPmf {
  std::vector<BigCount> numer;  // numer[v-1] is the mass numerator at v
  BigCount denom = 1;

  std::uint64_t support_max() const { return numer.size(); }

  BigRational mass(std::uint64_t v) const {
    if (v == 0 || v > numer.size()) return BigRational(0);
    return BigRational(numer[v - 1], denom);
  }

  BigRational total() const {
    BigCount s = 0;
    for (const auto& x : numer) s += x;
    return BigRational(s, denom);
  }

  BigRational mean() const {
    BigCount s = 0;
    for (std::size_t v = 1; v <= numer.size(); ++v)
      s += BigCount(v) * numer[v - 1];
    return BigRational(s, denom);
  }
};

// Exact finite-n laws of the cycle count K_n, longest cycle M_n, and
// shortest cycle T_n, assembled by accumulating cyc_class_size over all
// cycle types of weight n.  Common denominator (2n-1)!!.
struct ExactDistributions {
  unsigned n = 0;
  ExactPmf K, M, T;
  BigRational ex_k, ex_m, ex_t;
};

inline ExactDistributions exact_distributions(unsigned n,
                                              unsigned cap = kDefaultPartitionCap) {
  ExactDistributions d;
  d.n = n;
  const BigCount denom = odd_double_factorial(n);
  d.K.denom = d.M.denom = d.T.denom = denom;
  d.K.numer.assign(n, BigCount(0));
  d.M.numer.assign(n, BigCount(0));
  d.T.numer.assign(n, BigCount(0));
  if (n == 0) {
    d.ex_k = d.ex_m = d.ex_t = 0;  // the empty cyclation: empty pmfs, Ex = 0
    return d;
  }
  for_each_cycle_type(
      n,
      [&](const std::vector<std::uint32_t>& mult) {
        const BigCount size = cyc_class_size(n, mult);
        std::uint64_t k = 0, longest = 0, shortest = 0;
        for (std::size_t l = mult.size(); l >= 1; --l) {
          if (mult[l - 1] > 0) {
            k += mult[l - 1];
            if (longest == 0) longest = l;
            shortest = l;
          }
        }
        d.K.numer[k - 1] += size;
        d.M.numer[longest - 1] += size;
        d.T.numer[shortest - 1] += size;
      },
      cap);
  d.ex_k = d.K.mean();
  d.ex_m = d.M.mean();
  d.ex_t = d.T.mean();
  return d;
}

}  // namespace cyclation
