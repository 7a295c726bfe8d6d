#pragma once

#include <stdexcept>
#include <string>

namespace sleevesim {

/// Bad user input: out-of-domain parameters, malformed files, inconsistent
/// configuration. Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure on valid input: no bracketed root, rank-deficient fit,
/// diverging integration. Maps to CLI exit code 1.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sleevesim
