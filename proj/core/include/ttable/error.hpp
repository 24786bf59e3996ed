#pragma once

#include <stdexcept>

namespace ttable {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violation of a model rule: invalid type or record, out-of-bounds cell,
/// conflicting record union, bad operator argument.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Table construction failure: an ambiguous placement under the error policy,
/// or an aggregate that cannot combine the colliding values.
class BuildError : public Error {
 public:
  using Error::Error;
};

/// File or format problem in one of the codecs.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ttable
