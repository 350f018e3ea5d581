#pragma once

#include <stdexcept>
#include <string>

namespace ringgather {

// Bad user-supplied parameters (k >= n, malformed configuration, ...).
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke an operation's precondition, or an internal postcondition
// failed. Either way this is a defect, not an input problem.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Resource guards (arena vertex cap, oracle state cap).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ringgather
