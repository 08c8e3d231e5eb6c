#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autfn {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRank : public Error {
 public:
  using Error::Error;
};

class BadIndices : public Error {
 public:
  using Error::Error;
};

class UnsupportedRank : public Error {
 public:
  using Error::Error;
};

class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class ClosureCapExceeded : public Error {
 public:
  using Error::Error;
};

class StepBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class RankTooLarge : public Error {
 public:
  using Error::Error;
};

class ElementNotInGroup : public Error {
 public:
  using Error::Error;
};

// Syntax error in the expression / word / suite-file grammars.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input that is meaningless at the given rank (bad indices etc).
class SemanticError : public Error {
 public:
  using Error::Error;
};

// Raised by orientation checks when neither g x g^-1 nor g^-1 x g matches.
class NoOrientationMatches : public Error {
 public:
  using Error::Error;
};

}  // namespace autfn
