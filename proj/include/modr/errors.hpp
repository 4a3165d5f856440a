#pragma once

#include <stdexcept>

namespace modr {

/// Malformed or non-conforming input (bad file, dimension mismatch, unknown name).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold for the given operands.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace modr
