#pragma once

#include <stdexcept>
#include <string>

namespace posmaps {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range or malformed parameters (degree, offsets, a, c, permutation text).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON document or missing field.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Matrix shape mismatch or dimension overflow.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Input violates a numerical contract, e.g. a non-Hermitian matrix handed to
// the Hermitian eigensolver.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Parameters are valid but an operation's precondition does not hold
// (unsupported regime, failed inequality).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A quantity that is provably zero or PSD came out otherwise. Indicates a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace posmaps
