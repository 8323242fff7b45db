#pragma once

#include <stdexcept>
#include <string>

namespace gdalex {

// Malformed arguments: bad orders, out-of-range vertices, infeasible sequences.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments are well formed but outside what a routine handles (size caps,
// n outside a formula's range).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition on the input object does not hold, e.g. asking
// for the spectrum of a set that is not a global defensive alliance.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// No feasible sequence / configuration exists for the request.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gdalex
