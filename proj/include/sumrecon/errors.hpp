#pragma once

#include <stdexcept>
#include <string>

namespace sumrecon {

/// Raised when a caller passes a value outside an operation's domain
/// (bad probability, mismatched lengths, malformed literal).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a fixed code or design cannot be built as requested
/// (e.g. a rank-deficient parity-check matrix).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sumrecon
