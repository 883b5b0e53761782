#pragma once

#include <stdexcept>
#include <string>

namespace redux {

/// Malformed input, layout/field mismatch or a violated precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed the configured enumeration guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A property that a reduction guarantees did not hold on a concrete
/// instance. Seeing one of these means a bug in this library.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error("INVARIANT-VIOLATION: " + what) {}
};

}  // namespace redux
