#pragma once

#include <stdexcept>
#include <string>

namespace poext {

// Input value outside the mathematical domain of an operation
// (x outside a support, probability outside (0,1), negative t, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Structurally invalid argument (bad enum value, empty grid, mismatched
// baselines, unknown catalog id, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A derivative or ratio blew up at a known location.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, double where)
      : std::runtime_error(what + " at t=" + std::to_string(where)), location(where) {}
  double location;
};

// Requested combination is a declared limitation, not a bug.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iteration failed to converge / bracket.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace poext
