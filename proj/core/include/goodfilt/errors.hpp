#pragma once

#include <stdexcept>
#include <string>

namespace goodfilt {

// Base class for every domain error thrown by the library.  The CLI maps
// these to exit code 1; anything else escaping is a bug.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedType : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// Exact integer arithmetic left the representable range.  We abort the
// computation rather than wrap.
struct OverflowError : Error {
  using Error::Error;
};

struct GroupTooLarge : Error {
  using Error::Error;
};

struct NotDominant : Error {
  using Error::Error;
};

struct NotPrime : Error {
  using Error::Error;
};

struct NotWInvariant : Error {
  using Error::Error;
};

struct NonTerminating : Error {
  using Error::Error;
};

// A multiplicity needed exactly could only be bounded from above.
struct Ambiguous : Error {
  using Error::Error;
};

struct SimpleModule : Error {
  using Error::Error;
};

struct WrongType : Error {
  using Error::Error;
};

struct PTooSmall : Error {
  using Error::Error;
};

}  // namespace goodfilt
