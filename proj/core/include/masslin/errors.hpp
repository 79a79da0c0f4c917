#pragma once

#include <stdexcept>
#include <string>

namespace masslin {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix dimensions (caller bug).
struct DimensionError : Error {
  using Error::Error;
};

/// Input outside an operation's mathematical domain (zero vector,
/// division by zero, vanishing denominator, missing antipodal pair).
struct DomainError : Error {
  using Error::Error;
};

/// Degenerate geometry: unbounded or empty feasible set, polytope not
/// full-dimensional, non-simple polytope where simplicity is required.
struct GeometryError : Error {
  using Error::Error;
};

/// Input is a valid polytope but fails the Delzant smoothness check.
struct NotDelzantError : Error {
  using Error::Error;
};

/// Malformed textual input: rationals, JSON specs, grid expressions.
struct ParseError : Error {
  using Error::Error;
};

/// A randomized search exhausted its retry budget.
struct SamplingError : Error {
  using Error::Error;
};

/// An internal exactness cross-check failed; indicates a bug or a
/// violated hypothesis, never a rounding artifact.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace masslin
