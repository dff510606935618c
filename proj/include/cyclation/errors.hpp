#pragma once

#include <stdexcept>
#include <string>

namespace cyclation {

// Raised when an operation would exceed a configured size cap (partition
// enumeration, brute-force pairing enumeration, sampler table sizes).
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a numeric routine cannot certify its requested tolerance.
class tolerance_error : public std::runtime_error {
public:
  explicit tolerance_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed structural input (bad cycle type, broken involution,
// unparseable pairing line).
class structure_error : public std::runtime_error {
public:
  explicit structure_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cyclation
