#pragma once

#include <stdexcept>
#include <string>

namespace vuf {

/// Bad user input: malformed names, violated preconditions, invalid data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force enumeration would exceed its configured evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A library-internal consistency check failed.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vuf
