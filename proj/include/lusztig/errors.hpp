#pragma once

#include <stdexcept>
#include <string>

namespace lusztig {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested root system / variant / option is not implemented.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (p < h, non-dominant weight, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (term count, loop bound) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lusztig
