#pragma once

#include <stdexcept>
#include <string>

namespace parachk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed problem document; `where` is a byte offset or a JSON path.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// A value does not inhabit the functor it is declared against.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// A functor has no fixed-arity shape schema.
class UnsupportedFunctor : public Error {
 public:
  using Error::Error;
};

/// Problem violates a structural invariant (e.g. inconsistent bases).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

/// Raised by the oracle when an instance is out of bounds or not groundable.
class OracleError : public Error {
 public:
  using Error::Error;
};

}  // namespace parachk
