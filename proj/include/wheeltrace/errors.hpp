#pragma once

#include <stdexcept>

namespace wheeltrace {

/// Precondition or contract violation on an input (CLI exit code 1).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation failure: quadrature did not converge, fit degenerate, etc.
/// (CLI exit code 2).
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A requested angle q_phi^k * t exceeds the double-precision phase budget;
/// evaluating it would silently lose the angle modulo 2*pi.
class PhaseBudgetError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

/// File I/O failure, message carries the offending path.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace wheeltrace
