#pragma once

#include <stdexcept>
#include <string>

namespace plie {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not agree (vector lengths, matrix sizes, ambient dims).
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError() : Error("matrix is singular") {}
};

// Input is well-formed but violates a mathematical precondition
// (non-symmetric Gram matrix, indefinite metric, Jacobi failure in checked mode).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The metacurvature closed form is only meaningful on flat triples.
class NotFlatError : public Error {
 public:
  NotFlatError() : Error("metacurvature requested on a non-flat triple") {}
};

class UnknownNameError : public Error {
 public:
  explicit UnknownNameError(const std::string& name)
      : Error("unknown name: " + name) {}
};

}  // namespace plie
