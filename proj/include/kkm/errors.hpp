#pragma once

#include <stdexcept>
#include <string>

namespace kkm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: duplicate vertices, dimension mismatch,
/// schema violations, ambient mismatch.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Orientation propagation found a conflict.
class NotOrientable : public Error {
 public:
  using Error::Error;
};

/// The query point lies on the image of the map, so no class is defined.
class OnImage : public Error {
 public:
  using Error::Error;
};

/// A precondition of a degree-type computation fails on this input
/// (full-label simplex present, non-closed domain, non-empty intersection).
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

/// The homotopy class asked for has no computable integer representation
/// for this domain.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace kkm
