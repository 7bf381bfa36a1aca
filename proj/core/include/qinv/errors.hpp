#pragma once

#include <stdexcept>
#include <string>

namespace qinv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient qubit counts, or a state has the wrong length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A transvection index exceeds the auxiliary degree of an operand.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument: unknown name, malformed tuple, singular matrix.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A variable could not be resolved during numeric or exact evaluation.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Primed working variables leaked out of a transvection.
class InternalStateError : public Error {
 public:
  using Error::Error;
};

/// A series description cannot be expanded (e.g. a factor of zero z-order).
class SpecificationError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity disagrees with a dimension it must match; signals a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qinv
