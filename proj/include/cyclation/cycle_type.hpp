#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cyclation/errors.hpp"

namespace cyclation {

// Cycle structure (i_1, ..., i_n): counts[l-1] cycles of length l.
// Trailing zeros are stripped on construction, so two types that differ only
// by appended zeros compare equal.  The weight n is sum(l * i_l).
class CycleType {
public:
  CycleType() = default;

  explicit CycleType(std::vector<std::uint32_t> counts) : counts_(std::move(counts)) {
    while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  }

  template <typename Len>
  static CycleType from_lengths(const std::vector<Len>& lengths) {
    std::uint64_t maxlen = 0;
    for (auto l : lengths) maxlen = std::max<std::uint64_t>(maxlen, l);
    std::vector<std::uint32_t> c(maxlen, 0);
    for (auto l : lengths) {
      if (l == 0) throw structure_error("cycle length 0 in lengths multiset");
      ++c[static_cast<std::uint64_t>(l) - 1];
    }
    return CycleType(std::move(c));
  }

  const std::vector<std::uint32_t>& counts() const { return counts_; }

  // i_l, with i_l = 0 beyond the stored range.
  std::uint32_t count(std::uint64_t length) const {
    if (length == 0 || length > counts_.size()) return 0;
    return counts_[length - 1];
  }

  // n = sum l * i_l
  std::uint64_t weight() const {
    std::uint64_t n = 0;
    for (std::size_t l = 0; l < counts_.size(); ++l)
      n += (l + 1) * static_cast<std::uint64_t>(counts_[l]);
    return n;
  }

  // k = sum i_l
  std::uint64_t cycle_count() const {
    std::uint64_t k = 0;
    for (auto c : counts_) k += c;
    return k;
  }

  // Longest cycle length; 0 for the empty type.
  std::uint64_t longest() const { return counts_.size(); }

  // Shortest cycle length; 0 for the empty type.
  std::uint64_t shortest() const {
    for (std::size_t l = 0; l < counts_.size(); ++l)
      if (counts_[l] > 0) return l + 1;
    return 0;
  }

  bool empty() const { return counts_.empty(); }

  bool operator==(const CycleType& o) const { return counts_ == o.counts_; }
  bool operator<(const CycleType& o) const { return counts_ < o.counts_; }

  // "(i_1,...,i_m)" with trailing zeros already stripped.
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(counts_[i]);
    }
    s += ')';
    return s;
  }

private:
  std::vector<std::uint32_t> counts_;
};

}  // namespace cyclation
