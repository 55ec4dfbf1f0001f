#pragma once

#include <stdexcept>
#include <string>

namespace mvb {

// A probability table contains a zero entry where strict positivity is
// required (zero mass makes the corresponding natural parameter infinite).
class PositivityError : public std::runtime_error {
 public:
  explicit PositivityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested problem size exceeds a hard cap (full 2^p tables, enumeration).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mvb
