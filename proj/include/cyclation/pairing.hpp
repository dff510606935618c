#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cyclation/cycle_type.hpp"
#include "cyclation/errors.hpp"

namespace cyclation {

// A pairing of the 2n endpoints of n intervals: partner[e] is the endpoint
// glued to e.  Interval m owns endpoints 2m and 2m+1.  Valid pairings are
// fixed-point-free involutions on {0, ..., 2n-1}.
struct Pairing {
  std::vector<uint32_t> partner;

  unsigned n() const { return static_cast<unsigned>(partner.size() / 2); }
};

inline void validate(const Pairing& p) {
  const size_t m = p.partner.size();
  if (m % 2 != 0) throw structure_error("pairing has odd endpoint count");
  for (size_t e = 0; e < m; ++e) {
    uint32_t q = p.partner[e];
    if (q >= m) throw structure_error("pairing partner out of range");
    if (q == e) throw structure_error("pairing has a fixed point");
    if (p.partner[q] != e) throw structure_error("pairing is not an involution");
  }
}

// Cycle lengths of the induced cyclation.  Interval edges {2m, 2m+1} and
// pairing edges together form a 2-regular graph; each component alternates
// the two edge kinds and covers l intervals, a cycle of length l.
inline std::vector<unsigned> cycle_lengths(const Pairing& p) {
  const size_t m = p.partner.size();
  std::vector<bool> seen(m, false);
  std::vector<unsigned> lengths;
  for (size_t start = 0; start < m; ++start) {
    if (seen[start]) continue;
    unsigned len = 0;
    size_t e = start;
    do {
      seen[e] = true;
      seen[e ^ 1] = true;
      ++len;
      e = p.partner[e ^ 1];
    } while (e != start);
    lengths.push_back(len);
  }
  return lengths;
}

inline CycleType cycle_type_of(const Pairing& p) {
  return CycleType::from_lengths(cycle_lengths(p));
}

// One pairing per line: n followed by the 2n partner values.
inline std::string to_line(const Pairing& p) {
  std::ostringstream out;
  out << p.n();
  for (uint32_t q : p.partner) out << ' ' << q;
  return out.str();
}

inline Pairing from_line(const std::string& line) {
  std::istringstream in(line);
  long long n = -1;
  if (!(in >> n) || n < 0) throw structure_error("pairing line: bad interval count");
  Pairing p;
  p.partner.resize(2 * static_cast<size_t>(n));
  for (auto& q : p.partner) {
    long long v = -1;
    if (!(in >> v) || v < 0) throw structure_error("pairing line: bad partner value");
    q = static_cast<uint32_t>(v);
  }
  long long extra;
  if (in >> extra) throw structure_error("pairing line: trailing values");
  validate(p);
  return p;
}

}  // namespace cyclation
