#pragma once

#include <stdexcept>
#include <string>

namespace gencx {

/// Base class of every error raised by gencx.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands with non-conforming dimensions or field tags.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input that violates its precondition
/// (non-skew form, non-isotropic subspace, L meets its conjugate, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed. This
/// always indicates a bug, never bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace gencx
