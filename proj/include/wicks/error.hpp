#pragma once

#include <stdexcept>
#include <string>

namespace wicks {

// Text that does not parse as a word or assignment.
class MalformedInput : public std::invalid_argument {
 public:
  explicit MalformedInput(const std::string& what) : std::invalid_argument(what) {}
};

// An argument outside an operation's domain (non-quadratic word, trivial
// element where a nontrivial one is required, wrong symbol kind...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The equation has no solution at all (e.g. U outside H' for commutators).
class NoSolution : public std::runtime_error {
 public:
  explicit NoSolution(const std::string& what) : std::runtime_error(what) {}
};

// reduce_solution detected a move that would change the genus.
class HypothesisViolation : public std::runtime_error {
 public:
  explicit HypothesisViolation(const std::string& what) : std::runtime_error(what) {}
};

// A Wicks form table is required that is beyond the enumeration budget.
class TableUnavailable : public std::runtime_error {
 public:
  explicit TableUnavailable(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration stopped before completion. Never returned as a silent partial list.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wicks
