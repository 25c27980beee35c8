#pragma once

#include <stdexcept>
#include <string>

namespace lbkd {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coordinate was NaN or infinite.
class NonFiniteCoordinate : public Error {
 public:
  using Error::Error;
};

/// The input does not fit the 32-bit tag space.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed point or tree file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Arguments that violate a documented precondition (empty tree, k = 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace lbkd
