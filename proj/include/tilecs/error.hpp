#pragma once

#include <stdexcept>
#include <string>

namespace tilecs {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cell coordinates left the safe range, or exact arithmetic overflowed.
struct OverflowError : Error {
  using Error::Error;
};

// Malformed input text (tiling-spec JSON, presentations, annotations, numbers).
struct ParseError : Error {
  using Error::Error;
};

// Lookup of a catalog key, base label or group that does not exist.
struct UnknownKeyError : Error {
  using Error::Error;
};

// A precondition on arguments was violated.
struct InvalidArgument : Error {
  using Error::Error;
};

// A fit was requested on fewer terms than its search bounds require.
struct InsufficientTerms : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

[[noreturn]] inline void fail_parse(const std::string& msg) { throw ParseError(msg); }

}  // namespace tilecs
