#pragma once

#include <stdexcept>
#include <string>

namespace ccperm {

// Base of every error raised by the library. Subclasses map one-to-one onto
// the CLI exit codes (see cli.hpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument to an operation (e.g. a transposition with i == j).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed textual or JSON input, or a value violating a type invariant.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration was requested above the configured limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Exact arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccperm
