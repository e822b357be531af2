#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rdyn {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The operation has no meaning for this input (for example the maximal
// orbifold of a power map).
class NotDefined : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NonRationalPosition : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotGeneralizedLattes : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ReducibleCurve : public PreconditionError {
 public:
  ReducibleCurve(const std::string& what, std::vector<std::string> factors)
      : PreconditionError(what), factors_(std::move(factors)) {}
  const std::vector<std::string>& factors() const { return factors_; }

 private:
  std::vector<std::string> factors_;
};

class Unsupported : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A search hit one of its caps; the answer is unknown, not negative.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

// An identity that theory guarantees failed to verify. Always a bug or a
// counterexample worth keeping.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace rdyn
