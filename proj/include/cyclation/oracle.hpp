#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "cyclation/cycle_type.hpp"
#include "cyclation/errors.hpp"
#include "cyclation/pairing.hpp"

namespace cyclation {

inline constexpr unsigned kOracleCap = 7;  // (2*7-1)!! = 135135 pairings

namespace detail {

template <typename Visitor>
void visit_pairings(Pairing& p, uint32_t low, Visitor& visit) {
  const uint32_t m = static_cast<uint32_t>(p.partner.size());
  while (low < m && p.partner[low] != UINT32_MAX) ++low;
  if (low == m) {
    visit(const_cast<const Pairing&>(p));
    return;
  }
  for (uint32_t q = low + 1; q < m; ++q) {
    if (p.partner[q] != UINT32_MAX) continue;
    p.partner[low] = q;
    p.partner[q] = low;
    visit_pairings(p, low + 1, visit);
    p.partner[low] = UINT32_MAX;
    p.partner[q] = UINT32_MAX;
  }
}

}  // namespace detail

// Visits every fixed-point-free involution on 2n labels exactly once, in
// the lexicographic order of the partner sequence.
template <typename Visitor>
void for_each_pairing(unsigned n, Visitor&& visit) {
  if (n > kOracleCap) throw resource_error("for_each_pairing: n exceeds the enumeration cap");
  Pairing p;
  p.partner.assign(2 * static_cast<size_t>(n), UINT32_MAX);
  detail::visit_pairings(p, 0, visit);
}

// Exhaustive cycle-type counts over all (2n-1)!! pairings; the independent
// oracle the class-size formula is checked against.
inline std::map<CycleType, uint64_t> brute_force_enumerate(unsigned n) {
  std::map<CycleType, uint64_t> counts;
  for_each_pairing(n, [&](const Pairing& p) { ++counts[cycle_type_of(p)]; });
  return counts;
}

}  // namespace cyclation
