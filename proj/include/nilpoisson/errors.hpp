#pragma once

#include <stdexcept>
#include <string>

namespace nilpoisson {

// Raised for invalid mathematical input: zero inverses, wrong dimensions,
// parameter-count mismatches.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotInvertible : DomainError {
  using DomainError::DomainError;
};

// Two radical extensions with different (m, q) met in one operation.
struct UnsupportedTower : DomainError {
  using DomainError::DomainError;
};

// Symbolic delta handed to an operation that needs a number.
struct UnsupportedMode : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace nilpoisson
