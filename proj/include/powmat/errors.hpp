#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace powmat {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed user input: bad set literals, bad flags, bad dimensions.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class EmptySetError : public InvalidInput {
 public:
  EmptySetError() : InvalidInput("set must not be empty") {}
};

class DuplicateElementError : public InvalidInput {
 public:
  explicit DuplicateElementError(std::string value)
      : InvalidInput("duplicate element " + value), value_(std::move(value)) {}
  const std::string& value() const { return value_; }

 private:
  std::string value_;
};

class NonPositiveElementError : public InvalidInput {
 public:
  explicit NonPositiveElementError(std::string value)
      : InvalidInput("element " + value + " is not a positive integer"),
        value_(std::move(value)) {}
  const std::string& value() const { return value_; }

 private:
  std::string value_;
};

class ElementNotInSetError : public InvalidInput {
 public:
  explicit ElementNotInSetError(std::string value)
      : InvalidInput("element " + value + " is not a member of the set"),
        value_(std::move(value)) {}
  const std::string& value() const { return value_; }

 private:
  std::string value_;
};

class NotDivisibleError : public InvalidInput {
 public:
  NotDivisibleError(const std::string& lo, const std::string& hi)
      : InvalidInput(lo + " does not divide " + hi) {}
};

class DimensionMismatchError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidPermutationError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class InvalidFamilyError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by zero") {}
};

/// A structural precondition of an operation does not hold for the inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotGcdClosedError : public PreconditionError {
 public:
  NotGcdClosedError(std::string left, std::string right, std::string g)
      : PreconditionError("set is not gcd closed: gcd(" + left + ", " + right +
                          ") = " + g + " is missing"),
        left_(std::move(left)),
        right_(std::move(right)),
        gcd_(std::move(g)) {}
  const std::string& left() const { return left_; }
  const std::string& right() const { return right_; }
  const std::string& gcd() const { return gcd_; }

 private:
  std::string left_, right_, gcd_;
};

class NotFactorClosedError : public PreconditionError {
 public:
  explicit NotFactorClosedError(const std::string& element, const std::string& divisor)
      : PreconditionError("set is not factor closed: " + divisor + " | " + element +
                          " but " + divisor + " is missing") {}
};

class TooManyGtdsError : public PreconditionError {
 public:
  TooManyGtdsError(std::string element, int count)
      : PreconditionError("element " + element + " has " + std::to_string(count) +
                          " greatest-type divisors; closed forms require at most 2"),
        element_(std::move(element)),
        count_(count) {}
  const std::string& element() const { return element_; }
  int count() const { return count_; }

 private:
  std::string element_;
  int count_;
};

class HypothesisViolatedError : public PreconditionError {
 public:
  explicit HypothesisViolatedError(std::string hypothesis)
      : PreconditionError("hypothesis violated: " + hypothesis),
        hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Inversion or quotient formation hit a singular matrix. Carries the
/// determinant (always "0") so callers can report it.
class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(std::string context)
      : Error(context + ": matrix is singular (determinant 0)") {}
  std::string determinant() const { return "0"; }
};

/// A library invariant failed; always a bug or a broken build.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ZeroBetaError : public InternalError {
 public:
  explicit ZeroBetaError(int k)
      : InternalError("beta coefficient vanished at index " + std::to_string(k) +
                      " despite the structural hypotheses") {}
};

class ReproductionMismatchError : public InternalError {
 public:
  ReproductionMismatchError(std::string id, long long row, long long col,
                            std::string got,
                     std::string want)
      : InternalError("reproduction " + id + " differs at (" + std::to_string(row) +
                      ", " + std::to_string(col) + "): computed " + got +
                      ", expected " + want),
        id_(std::move(id)),
        row_(row),
        col_(col),
        got_(std::move(got)),
        want_(std::move(want)) {}
  const std::string& id() const { return id_; }
  long long row() const { return row_; }
  long long col() const { return col_; }
  const std::string& got() const { return got_; }
  const std::string& want() const { return want_; }

 private:
  std::string id_;
  long long row_, col_;
  std::string got_, want_;
};

}  // namespace powmat
