#pragma once

#include <stdexcept>
#include <string>

namespace ctc {

/// Caller passed arguments outside a function's contract (bad dimensions,
/// out-of-range parameters, unknown names). Maps to CLI exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data is unusable (non-finite values, malformed files). Exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure failed on otherwise valid inputs. Exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The extreme-index set of an estimator is empty; a value of 0 would read
/// as evidence of non-causality, so this is raised instead.
class DegenerateEstimateError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Distribution fitting did not converge or the sample is degenerate.
class FitError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// No lag in a profile clears the selection threshold.
class NoDelayError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Malformed input file; carries a location in the message.
class IngestError : public DataError {
 public:
  using DataError::DataError;
};

/// A simulated path left the finite range (unstable model specification).
class SimulationError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace ctc
