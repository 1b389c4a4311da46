#pragma once

#include <stdexcept>
#include <string>

namespace maxab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: dimension/flavor mismatch, invalid tags, bad JSON.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A computation exceeded a configured bound (closure cap, brute-force bound).
class BoundError : public Error {
 public:
  using Error::Error;
};

// Two elements whose commutator is not a scalar matrix.
class NotScalarCommutator : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace maxab
