#pragma once

#include <stdexcept>
#include <string>

namespace poolsim {

/// Base class for every domain error this library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor or setter received a value outside its documented range.
/// The message names the offending field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A share was appended with a timestamp earlier than the ledger tail.
class OrderingError : public Error {
 public:
  using Error::Error;
};

/// A miner index is outside [0, pool_size).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A won round was presented with an empty share ledger.
class DegenerateRoundError : public Error {
 public:
  using Error::Error;
};

/// A share was delayed past the round-ending block and became stale.
class StaleShareError : public Error {
 public:
  using Error::Error;
};

/// A Monte Carlo estimate was requested from an empty or unusable sample.
class InsufficientSampleError : public Error {
 public:
  using Error::Error;
};

}  // namespace poolsim
