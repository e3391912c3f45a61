#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hemi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input that never reaches axiom or predicate checking:
/// non-square tables, out-of-range entries, a misplaced zero.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (empty subset, constant
/// fuzzy set where a non-constant one is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hemi
