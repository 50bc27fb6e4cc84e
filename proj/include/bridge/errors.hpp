#pragma once

#include <stdexcept>
#include <string>

namespace bridge {

/// Input violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A continued fraction or other expression hit a division by zero.
class DegenerateValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. For legal input this indicates
/// a bug or a closed form that does not hold.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested case has no implementation (e.g. T(q) with q != 4).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bridge
