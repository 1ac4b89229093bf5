#pragma once

#include <stdexcept>
#include <string>

namespace semlab {

// Raised when a bounded enumeration or sweep would exceed its node budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by an oracle once its query allowance is spent.
class BudgetExhaustedError : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

// Raised by emulate_eq when no candidate matched within maxCandidates.
class CandidateBudgetError : public ResourceLimitError {
 public:
  using ResourceLimitError::ResourceLimitError;
};

// delta_rel found the key pair in neither table.
class InconsistentTablesError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A transcript answer differed on replay against the forged language.
class ReplayMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lookup of an (expression, context) pair outside a world table's domain.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace semlab
