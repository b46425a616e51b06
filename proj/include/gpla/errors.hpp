#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpla {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ill-typed term construction (mismatched composition or union arities).
struct TypeError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

struct InvalidPermutation : Error {
  using Error::Error;
};

struct ZeroHyperplane : Error {
  using Error::Error;
};

/// Normal forms are defined for nonempty polyhedra only.
struct EmptyInput : Error {
  using Error::Error;
};

/// A structural impossibility surfaced at runtime; always a bug, never
/// swallowed.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace gpla
