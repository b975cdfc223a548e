#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

// Arithmetic failure: division by zero, inexact division.
class algebra_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical identity the library relies on did not hold.
// The CLI maps this to exit code 2.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed user input (rational literals, labels, ranges).
class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed request outside the supported range (e.g. symbolic Gram
// matrices above degree 3).
class unsupported_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cherednik
