#pragma once

#include <stdexcept>
#include <string>

namespace spm {

/// Malformed or out-of-contract input (bad weight, unknown operator name,
/// mismatched variable universe, ...). The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation could not complete as requested (closure did not stabilize,
/// singular projector weight, empty kernel, ...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spm
