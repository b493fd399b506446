#pragma once

#include <stdexcept>
#include <string>

namespace indel {

// Invalid (q, n, d) or operation arguments: odd d, d > 2n, t out of range, ...
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Real-valued argument outside the function's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The method's hypotheses do not cover these parameters (e.g. d = 2n for the
// Elias-type bound, d = 2 for the improved lower bounds).
class InapplicableMethod : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An enumeration would exceed its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace indel
