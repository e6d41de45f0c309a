#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace hypfib {

// A precondition on user-supplied data was violated.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested enumeration is larger than the configured loop budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void Require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

// Largest loop count any single operation may run without --force.
inline constexpr double kLoopBudget = 5e9;

inline void CheckBudget(double loops, bool force, const std::string& what) {
  if (!force && loops > kLoopBudget) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", loops);
    throw BudgetError(what + ": " + buf + " loop iterations exceed the budget of 5e9 (use --force)");
  }
}

}  // namespace hypfib
