#pragma once

#include <stdexcept>

namespace dixon {

// Exact halving hit an odd coefficient; the result would leave the
// integer-coefficient ring.
class ExactnessError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A request exceeded a hard size limit (e.g. symbolic determinants above
// the supported matrix dimension).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Two computation routes that must agree produced different values.
class IdentityViolationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dixon
