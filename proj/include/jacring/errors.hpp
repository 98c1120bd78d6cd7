#pragma once

#include <stdexcept>
#include <string>

namespace jacring {

// Error taxonomy: structural (malformed inputs/shapes), precondition
// (contract violations like wrong bidegree), unsupported (valid but outside
// the implemented surface), genericity (parameters fail a required open
// condition), resource (budget exhausted), inconsistency (two independent
// computations disagree — always a bug or a false hypothesis).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StructuralError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};
struct UnsupportedError : Error {
  using Error::Error;
};
struct GenericityError : Error {
  using Error::Error;
};
struct ResourceError : Error {
  using Error::Error;
};
struct InconsistencyError : Error {
  using Error::Error;
};

}  // namespace jacring
