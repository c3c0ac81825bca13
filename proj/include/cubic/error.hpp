#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

// Precondition failures caused by caller input (bad config, wrong arity,
// points off the surface, ...).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical invariant that should hold by theory was violated at runtime.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cubic
