#pragma once

#include <stdexcept>

namespace skq {

/// Malformed or inconsistent input data (exit code 2 at the command line).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold (exit code 2).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An internal cross-check failed (exit code 1).
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace skq
