#pragma once

#include <stdexcept>
#include <string>

namespace projconst {

// Malformed input: unparsable JSON, missing fields, shape mismatches.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Domain or hypothesis violation: out-of-range parameters, non-normalized
// functionals, formula preconditions that do not hold.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Internal failure: a bracket that must exist was not found, an invariant
// the solver guarantees was violated.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace projconst
