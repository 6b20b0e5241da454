#pragma once

#include <stdexcept>
#include <string>

namespace tverberg {

/// Base class of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class NotFree : public Error {
 public:
  using Error::Error;
};

class InvalidComplex : public Error {
 public:
  using Error::Error;
};

class NotACycle : public Error {
 public:
  using Error::Error;
};

class NotAGenerator : public Error {
 public:
  using Error::Error;
};

class NoIntegerSolution : public Error {
 public:
  using Error::Error;
};

class BadArity : public Error {
 public:
  using Error::Error;
};

class OverlappingParts : public Error {
 public:
  using Error::Error;
};

class InconsistentConstraints : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the 1-based offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tverberg
