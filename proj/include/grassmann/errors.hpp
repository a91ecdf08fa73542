#pragma once

#include <stdexcept>
#include <string>

namespace grassmann {

// Base of every error raised by the algebra layer.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different scalar domains or different ranks.
class DomainMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// The negation map was requested on degree 0 or 1, where none exists.
class NegationUndefined : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// A degree, index or order argument is outside the operation's range.
class DegreeError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// The operation needs a scalar domain it was not given (e.g. division).
class UnsupportedDomain : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Malformed literal, matrix or multivector input.
class ParseError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace grassmann
