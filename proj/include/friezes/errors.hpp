#pragma once

#include <stdexcept>
#include <string>

namespace friezes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input cannot be the quiddity sequence (or a row) of any infinite frieze.
class InvalidQuiddity : public Error {
 public:
  using Error::Error;
};

/// A polygon triangulation or strip arc set violates its structural invariants.
class InvalidTriangulation : public Error {
 public:
  using Error::Error;
};

/// A quiddity list cannot be realized by a triangulated polygon.
class NotRealizable : public Error {
 public:
  using Error::Error;
};

/// The materialized region of a windowed object is too small to answer.
/// Callers may enlarge the margin and retry.
class Truncated : public Error {
 public:
  using Error::Error;
};

/// Division that must be exact was not; the input table is inconsistent.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// A fixed-width value left its representable range.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or a schema violation; `path` is a JSON pointer to the
/// offending element (empty for syntax errors).
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace friezes
