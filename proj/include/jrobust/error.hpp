#pragma once

#include <stdexcept>
#include <string>

namespace jrobust {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: bad encoding, missing files, bad line ranges.
class InputError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation's precondition (overlapping edits, k > n, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

// The requested transformation cannot be applied at the given site.
class ApplicabilityError : public Error {
 public:
  using Error::Error;
};

// External naming provider failed (timeout, bad record, dead process).
class ProviderError : public Error {
 public:
  using Error::Error;
};

// The environment failed us: missing toolchain, spawn failure, I/O.
// Never used to report a failing verdict.
class InfrastructureError : public Error {
 public:
  using Error::Error;
};

class MetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace jrobust
