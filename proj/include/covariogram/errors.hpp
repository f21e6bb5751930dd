#pragma once

#include <stdexcept>
#include <string>

namespace cov {

/// Input outside the documented domain of an operation (CLI exit code 2).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A solver did not converge or produced an inconsistent result (CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cov
