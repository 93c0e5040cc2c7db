#pragma once

#include <stdexcept>
#include <string>

namespace mtfa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tape count or alphabet of an argument does not match the machine.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A machine violates the structural invariants of its model.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed machine or bundle file. `line` is 1-based, 0 when unknown.
class FormatError : public Error {
 public:
  FormatError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace mtfa
