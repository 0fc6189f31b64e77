#pragma once

#include <stdexcept>
#include <string>

namespace lalgebra {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Caller broke a documented precondition (wrong sizes, mismatched
/// signatures, out-of-range elements).  Distinct from a check returning
/// false: a false answer is a fact, a UsageError is a bug in the call.
struct UsageError : Error {
  using Error::Error;
};

/// A requested enumeration exceeds a configured bound.  The message names
/// the limit so the caller can raise it deliberately.
struct LimitError : Error {
  using Error::Error;
};

/// Malformed input document (JSON syntax, missing fields, bad ranges).
struct FormatError : Error {
  using Error::Error;
};

/// An internal cross-check that is supposed to be a theorem failed.
/// Never caught and papered over: if this fires, the computation that
/// produced the inputs is wrong and the run must stop.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace lalgebra
