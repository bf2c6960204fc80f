#pragma once

#include <stdexcept>
#include <string>

namespace negforms {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different variable lists, charts, or Koszul parameters.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (wrong degree, unknown variable,
/// n != 1 where a single generator is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace negforms
