#pragma once

#include <stdexcept>
#include <string>

namespace fanohodge {

/// Arguments outside the domain on which an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A contract precondition on parameters (g, k, i, ...) was violated.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact division left a nonzero remainder.
class InexactDivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index lies outside the valid range (e.g. a Betti degree beyond 2d).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Internal bookkeeping produced an impossible value; always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fanohodge
