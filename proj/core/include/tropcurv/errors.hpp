#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropcurv {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NonPositiveDimension : Error {
  using Error::Error;
};

struct DegenerateSimplex : Error {
  using Error::Error;
};

struct ZeroGenerator : Error {
  using Error::Error;
};

struct MissingFacets : Error {
  using Error::Error;
};

struct InvalidSampleCount : Error {
  using Error::Error;
};

/// Parse failure; `position` is the byte offset into the source text.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct DuplicateExponent : Error {
  using Error::Error;
};

struct NotGeneric : Error {
  using Error::Error;
};

struct NotNonSingular : Error {
  using Error::Error;
};

struct NotElementary : Error {
  using Error::Error;
};

struct UnknownExponent : Error {
  using Error::Error;
};

struct InvalidT : Error {
  using Error::Error;
};

struct NotPlaneCurve : Error {
  using Error::Error;
};

struct InsufficientResolution : Error {
  using Error::Error;
};

/// Malformed input document (JSON shape, missing fields, bad values).
struct InputError : Error {
  using Error::Error;
};

}  // namespace tropcurv
