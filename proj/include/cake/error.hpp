#pragma once

#include <stdexcept>
#include <string>

namespace cake {

// Bad arguments: out-of-range bounds, malformed valuations, empty inputs.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A cut query asked for more mass than remains to the right of the start point.
class InfeasibleCut : public DomainError {
 public:
  using DomainError::DomainError;
};

// A protocol broke one of its own invariants. Always a bug, never user error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested procedure does not support this many players.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exponential step exceeded its configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file does not match the expected JSON layout.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cake
