#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace truthpred {

/// Root of every domain error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The arithmetic fragment of a sentence failed the base grammar.
class BaseSyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class OpenFormulaError : public Error {
 public:
  using Error::Error;
};

class NumericBoundError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnknownCode : public Error {
 public:
  using Error::Error;
};

class NotInUniverse : public Error {
 public:
  using Error::Error;
};

class InvalidRule : public Error {
 public:
  using Error::Error;
};

class InconsistentSeed : public Error {
 public:
  using Error::Error;
};

class UnsoundSeed : public Error {
 public:
  using Error::Error;
};

class NotAChain : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class MalformedUniverse : public Error {
 public:
  using Error::Error;
};

class ArtifactFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace truthpred
