#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclation/cycle_type.hpp"
#include "cyclation/errors.hpp"

namespace cyclation {

// Enumeration beyond this weight requires an explicit override; p(60) is
// already ~9.7e5 types.
inline constexpr unsigned kDefaultPartitionCap = 60;

namespace detail {

template <typename Visitor>
void visit_partitions(unsigned remaining, unsigned max_part,
                      std::vector<std::uint32_t>& mult, Visitor&& visit) {
  if (remaining == 0) {
    visit(const_cast<const std::vector<std::uint32_t>&>(mult));
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    ++mult[part - 1];
    visit_partitions(remaining - part, part, mult, visit);
    --mult[part - 1];
  }
}

}  // namespace detail

// Visits every cycle type of weight n exactly once.  Order: largest part
// first, i.e. lexicographically decreasing in the reversed multiplicity
// vector (i_n, ..., i_1): (0,..,0,1) first, (n,0,..,0) last.  For n = 0 the
// single empty type is visited.  The visitor receives the multiplicity
// vector padded to length n; it must not retain the reference.
template <typename Visitor>
void for_each_cycle_type(unsigned n, Visitor&& visit,
                         unsigned cap = kDefaultPartitionCap) {
  if (n > cap)
    throw resource_error("cycle type enumeration: n = " + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap) +
                         " (raise the cap explicitly to proceed)");
  std::vector<std::uint32_t> mult(n, 0);
  if (n == 0) {
    visit(const_cast<const std::vector<std::uint32_t>&>(mult));
    return;
  }
  detail::visit_partitions(n, n, mult, visit);
}

// Materialized enumeration, same order.
inline std::vector<CycleType> cycle_types(unsigned n,
                                          unsigned cap = kDefaultPartitionCap) {
  std::vector<CycleType> out;
  for_each_cycle_type(
      n, [&](const std::vector<std::uint32_t>& mult) { out.emplace_back(mult); },
      cap);
  return out;
}

}  // namespace cyclation
