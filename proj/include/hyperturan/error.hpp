// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace hyperturan {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Input data violates an operation's stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant that a counting argument guarantees did not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// The requested construction does not apply to this input (does not prove
/// non-existence).
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Boundary input for which the operation's guarantee cannot be met exactly.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// r-density requested for a hypergraph with fewer than two edges.
class UndefinedDensityError : public Error {
 public:
  using Error::Error;
};

/// Malformed file or text input.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperturan
