#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsurf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed token in a boundary word; offset is a byte offset into the
/// original text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("parse error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class MixedSyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class NotPairedError : public Error {
 public:
  using Error::Error;
};

class UnsupportedWordError : public Error {
 public:
  using Error::Error;
};

/// Curve passes too close to the point a winding number is requested for.
class NearZeroError : public Error {
 public:
  using Error::Error;
};

class NonIntegralError : public Error {
 public:
  using Error::Error;
};

class InvalidInvariantError : public Error {
 public:
  using Error::Error;
};

class NotContractionError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class IndexRangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsurf
