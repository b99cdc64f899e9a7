#pragma once
// Error taxonomy shared by all modules. The CLI maps these to exit codes:
// domain_error -> 2, budget_error -> 3, internal_error -> 1.

#include <stdexcept>
#include <string>

namespace rh4 {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid input: bad parameter, precondition violation, unknown name.
struct domain_error : error {
  using error::error;
};

// Computation refused because it would exceed a resource budget.
struct budget_error : error {
  using error::error;
};

// Internal consistency failure (e.g. Witt dimension mismatch, a closed
// formula evaluating to a non-integer). Indicates a bug, never bad input.
struct internal_error : error {
  using error::error;
};

// Refusal of a loop-space computation whose simple-connectedness
// hypothesis is known to fail; carries the pi_1 diagnosis.
struct not_simply_connected_error : domain_error {
  not_simply_connected_error(const std::string& msg, std::string pi1_diagnosis)
      : domain_error(msg), pi1(std::move(pi1_diagnosis)) {}
  std::string pi1;
};

}  // namespace rh4
