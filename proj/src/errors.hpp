#pragma once

#include <stdexcept>
#include <string>

namespace avck {

/// Malformed external input: bad JSON spec, unknown field, out-of-range
/// user parameter. Maps to exit code 2 / AVCK_ERR_PARSE at the boundaries.
class spec_error : public std::runtime_error {
 public:
  explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated call contract: dimension mismatch, invalid probability vector,
/// singular input where an inverse is required.
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Solver breakdown (LP did not terminate cleanly, optimizer diverged).
/// Maps to exit code 3 / AVCK_ERR_NUMERIC.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace avck
