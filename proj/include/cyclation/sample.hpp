#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "cyclation/errors.hpp"
#include "cyclation/pairing.hpp"
#include "cyclation/rng.hpp"

namespace cyclation {

// Uniform pairing of 2n endpoints: repeatedly pair the lowest unpaired
// endpoint with a uniform choice among the others still unpaired.  Each
// pairing arises with probability 1/(2n-1)!!.  O(n) via a swap-remove pool
// plus an index map, so "lowest" is exact without keeping the pool sorted.
inline Pairing sample_pairing(unsigned n, Rng& rng) {
  Pairing p;
  p.partner.assign(2 * static_cast<size_t>(n), 0);
  std::vector<uint32_t> pool(2 * static_cast<size_t>(n));
  std::vector<uint32_t> pos(2 * static_cast<size_t>(n));
  for (uint32_t e = 0; e < pool.size(); ++e) pool[e] = pos[e] = e;

  auto remove = [&](uint32_t e) {
    uint32_t i = pos[e];
    uint32_t last = pool.back();
    pool[i] = last;
    pos[last] = i;
    pool.pop_back();
  };

  uint32_t low = 0;
  std::vector<bool> paired(2 * static_cast<size_t>(n), false);
  while (!pool.empty()) {
    while (paired[low]) ++low;
    remove(low);
    uint32_t b = pool[rng.next_below(pool.size())];
    remove(b);
    p.partner[low] = b;
    p.partner[b] = low;
    paired[low] = paired[b] = true;
  }
  return p;
}

// Cycle lengths only, via the chain law of the sequential sampler: an open
// chain with m untouched intervals left closes with probability 1/(2m+1),
// otherwise absorbs one interval.  One uniform per step, O(n) per draw.
inline std::vector<unsigned> sample_cycle_lengths_stepping(unsigned n, Rng& rng) {
  std::vector<unsigned> lengths;
  if (n == 0) return lengths;
  unsigned untouched = n - 1;
  unsigned len = 1;
  for (;;) {
    if (rng.next_below(2 * static_cast<uint64_t>(untouched) + 1) == 0) {
      lengths.push_back(len);
      if (untouched == 0) return lengths;
      --untouched;
      len = 1;
    } else {
      --untouched;
      ++len;
    }
  }
}

namespace detail {

// log of rho(j) = (2j+1)!!/(2j)!! = (2j+1)! / (4^j (j!)^2).
inline double log_rho(uint64_t j) {
  static const double kLog4 = std::log(4.0);
  return std::lgamma(2.0 * j + 2.0) - j * kLog4 - 2.0 * std::lgamma(j + 1.0);
}

}  // namespace detail

// Same chain, but jumping straight to the closing step: a chain opened with
// m untouched intervals closes when j are left with Pr[close at <= j] =
// rho(j)/rho(m), rho increasing, so one uniform and a binary search give
// the whole cycle.  O(K log n) per draw, K = number of cycles ~ (log n)/2.
inline std::vector<unsigned> sample_cycle_lengths(unsigned n, Rng& rng) {
  std::vector<unsigned> lengths;
  if (n == 0) return lengths;
  uint64_t untouched = n - 1;
  for (;;) {
    double target = std::log(rng.next_real()) + detail::log_rho(untouched);
    uint64_t lo = 0, hi = untouched;
    while (lo < hi) {  // smallest j with log_rho(j) >= target
      uint64_t mid = lo + (hi - lo) / 2;
      if (detail::log_rho(mid) >= target) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    lengths.push_back(static_cast<unsigned>(untouched - lo + 1));
    if (lo == 0) return lengths;
    untouched = lo - 1;
  }
}

// Permutation analog (uniform attachment): an open chain with m untouched
// elements closes with probability 1/(m+1).
inline std::vector<unsigned> sample_perm_cycle_lengths(unsigned n, Rng& rng) {
  std::vector<unsigned> lengths;
  if (n == 0) return lengths;
  unsigned untouched = n - 1;
  unsigned len = 1;
  for (;;) {
    if (rng.next_below(static_cast<uint64_t>(untouched) + 1) == 0) {
      lengths.push_back(len);
      if (untouched == 0) return lengths;
      --untouched;
      len = 1;
    } else {
      --untouched;
      ++len;
    }
  }
}

// Grow an n-interval pairing to n+1 intervals preserving uniformity.  The
// new endpoints 2n, 2n+1 either pair with each other (u = 2n) or split the
// edge at endpoint u < 2n.  The map (pairing, u) -> pairing is a bijection
// onto the (2n+1)!! larger pairings, which is the identity
// (2n+1)!! = (2n+1) (2n-1)!!.
inline void insert_interval(Pairing& p, Rng& rng) {
  const uint32_t a = static_cast<uint32_t>(p.partner.size());
  const uint32_t b = a + 1;
  uint64_t u = rng.next_below(p.partner.size() + 1);
  p.partner.push_back(0);
  p.partner.push_back(0);
  if (u == a) {
    p.partner[a] = b;
    p.partner[b] = a;
    return;
  }
  uint32_t x = static_cast<uint32_t>(u);
  uint32_t y = p.partner[x];
  p.partner[x] = a;
  p.partner[a] = x;
  p.partner[y] = b;
  p.partner[b] = y;
}

// Remove interval m: rejoin the partners its endpoints held (or drop a
// self-pair), then relabel the last interval to slot m.  Inverts
// insert_interval when m = n-1.
inline void delete_interval(Pairing& p, unsigned m) {
  const unsigned n = p.n();
  if (m >= n) throw structure_error("delete_interval: index out of range");
  const uint32_t e0 = 2 * m, e1 = 2 * m + 1;
  uint32_t a = p.partner[e0];
  uint32_t b = p.partner[e1];
  if (a != e1) {
    p.partner[a] = b;
    p.partner[b] = a;
  }
  const uint32_t f0 = 2 * (n - 1), f1 = f0 + 1;
  for (uint32_t from : {f0, f1}) {
    uint32_t to = from - f0 + e0;
    if (from == to) continue;
    uint32_t q = p.partner[from];
    if (q == f0) q = e0;  // partner also moves (self-pair within the last interval)
    if (q == f1) q = e1;
    p.partner[to] = q;
    p.partner[q] = to;
  }
  p.partner.pop_back();
  p.partner.pop_back();
}

}  // namespace cyclation
