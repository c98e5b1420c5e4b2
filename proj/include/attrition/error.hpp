#pragma once

#include <stdexcept>
#include <string>

namespace attrition {

/// Raised when a caller breaks an operation's precondition
/// (dimension mismatch, non-finite payoff, out-of-range parameter).
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// Zero-profit condition with c + D = 0: entry never stops.
class UnboundedEntry : public std::domain_error {
 public:
  explicit UnboundedEntry(const std::string& what) : std::domain_error(what) {}
};

/// Undiscounted infinite monopoly tail.
class DivergentTail : public std::domain_error {
 public:
  explicit DivergentTail(const std::string& what) : std::domain_error(what) {}
};

}  // namespace attrition
