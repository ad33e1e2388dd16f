// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace geocentre {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument to a constructor or operation (bad ellipsoid
/// parameters, malformed ring, invalid configuration).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The polygon has (numerically) zero signed area, so its centroid is
/// undefined.
class DegeneratePolygon : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not produce a trustworthy answer: a point on
/// the rotation axis, an iteration that did not converge, an oracle grid too
/// coarse to resolve the polygon.
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// Input data is unusable: unsupported geometry type, coordinates out of
/// range, unreadable file.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed input syntax. `offset` is the byte offset of the problem, `line`
/// and `column` are 1-based.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line,
             std::size_t column)
      : InputError(what), offset_(offset), line_(line), column_(column) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace geocentre
