#pragma once

#include <stdexcept>
#include <string>

namespace rsing {

/// Input violates a documented precondition or data invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Planar-map data that cannot be interpreted as a rotation system at all.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure failed to converge or lacked resolution.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rsing
