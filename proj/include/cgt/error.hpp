#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

// A computation ran out of its configured budget (rows, nodes, order bound).
// Never signals a wrong answer, only an inconclusive one.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Input violates an operation's precondition (bad arity, unknown label, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cgt
