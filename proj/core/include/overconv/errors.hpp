#pragma once

#include <stdexcept>
#include <string>

namespace overconv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands were built over different field configurations.
class ConfigMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A series has no terms below its precision cap, so its valuation is unknown.
class ZeroToPrecision : public Error {
 public:
  using Error::Error;
};

/// An operation on an exact multi-term series needs an explicit precision cap.
class PrecisionRequired : public Error {
 public:
  using Error::Error;
};

/// Lattice exponents left the 64-bit budget.
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

/// Term valuations did not grow over the tail window of an evaluation.
class DivergenceSuspected : public Error {
 public:
  using Error::Error;
};

/// A hypergeometric lower parameter hits a bracket value.
class InadmissibleParameter : public Error {
 public:
  using Error::Error;
};

/// Not enough profile entries past the requested tail start.
class InsufficientTail : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized data.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace overconv
