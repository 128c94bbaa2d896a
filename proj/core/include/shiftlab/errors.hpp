#pragma once

#include <stdexcept>
#include <string>

namespace shiftlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph, bad profile, bad step, bad arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale size guard was exceeded (enumeration, brute-force oracles).
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A computed rank profile failed validation even after resampling, or the
/// padding-stability check disagreed. Either signals insufficient genericity.
class GenericityError : public Error {
 public:
  using Error::Error;
};

}  // namespace shiftlab
