#pragma once

#include <stdexcept>
#include <string>

namespace eqsplit {

/// Malformed input: bad group spec, unknown label, bound violation.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A class function that fails to be a genuine character (non-integral or
/// negative multiplicity).
class NotGenuineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain of an operation (m > N, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eqsplit
