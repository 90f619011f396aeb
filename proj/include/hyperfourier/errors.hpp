#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperfourier {

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

/// Two multivectors from different Clifford algebras were combined.
class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

/// A multivector has support outside the subalgebra an operation requires.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// The fast transform path was requested for a grid it cannot handle.
class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

class SingularMapError : public Error {
 public:
  using Error::Error;
};

/// A linear map does not permute the sampling lattice.
class UnsupportedMapError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `location()` is a 1-based line for text input and a
/// byte offset for binary input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t location)
      : Error(what), location_(location) {}
  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

}  // namespace hyperfourier
