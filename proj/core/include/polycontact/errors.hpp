#pragma once

#include <stdexcept>
#include <string>

namespace polycontact {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different generator contexts (or charts).
class ContextMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ParityError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class UnknownGenerator : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class UnsupportedSubstitution : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace polycontact
