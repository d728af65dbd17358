#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transdim {

// Malformed input: bad coefficients, measures outside (0,1), bad literals.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation called outside its mathematical domain (e.g. b > a in sub_left).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arithmetic the two-tier ordinal representation refuses to answer.
class UnsupportedArithmetic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A user declaration contradicts what the engine derives.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two engine rules produced disjoint bounds with no declaration involved.
class RuleInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A finite construction cannot be carried out, e.g. a removal schedule that
// takes more than an interval has.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive check would exceed its point budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t required, std::size_t budget)
      : std::runtime_error("point budget exceeded: " + std::to_string(required) + " points, budget " +
                           std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::size_t required() const { return required_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t required_;
  std::size_t budget_;
};

}  // namespace transdim
