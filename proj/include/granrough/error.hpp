#pragma once

#include <stdexcept>
#include <string>

namespace granrough {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two sets, operators or relations bound to different universes were combined.
class UniverseMismatch : public Error {
 public:
  UniverseMismatch() : Error("operands belong to different universes") {}
};

/// A label, parameter or argument is outside its domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation was refused because the universe is too large.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace granrough
