#pragma once

#include <stdexcept>
#include <string>

namespace artin {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (graph files, words, presentations, scripts).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition that is not mathematical:
/// unknown names, mixing graphs, collisions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition failed: infinite type, disconnected parabolic,
/// non-crystallographic label.
class NotFiniteType : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (group order, coset count, search budget) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace artin
