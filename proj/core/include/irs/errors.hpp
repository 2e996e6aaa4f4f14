#pragma once
#include <stdexcept>
#include <string>

namespace irs {

// Hard errors: bad input, unusable configuration. Not retried.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct SelfLoopError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct InfeasibleDegreeSequence : Error { using Error::Error; };
struct InvalidParameters : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };

// Recoverable failures: another random attempt may succeed. The solve
// loop catches these and re-randomizes.
struct RecoverableError : Error {
  using Error::Error;
};

struct PartitionDegenerate : RecoverableError { using RecoverableError::RecoverableError; };
struct CapacityExceeded : RecoverableError { using RecoverableError::RecoverableError; };
struct GreedyInfeasible : RecoverableError { using RecoverableError::RecoverableError; };
struct OrderingInvariantViolation : RecoverableError { using RecoverableError::RecoverableError; };

}  // namespace irs
