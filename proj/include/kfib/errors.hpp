#pragma once

#include <stdexcept>

namespace kfib {

// Contract violations by the caller: bad flags, mixed radicands,
// operations requested in the wrong coefficient mode.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined operations: division by zero, series division
// by a series with vanishing constant term, degenerate family parameters.
class arithmetic_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace kfib
