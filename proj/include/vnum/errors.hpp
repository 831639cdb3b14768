#pragma once

#include <stdexcept>
#include <string>

namespace vnum {

/// Bad input or violated precondition. Maps to CLI exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by operations that are undefined for the zero ideal (a clutter
/// without edges).
class ZeroIdealError : public InputError {
 public:
  ZeroIdealError() : InputError("zero ideal") {}
};

/// Two independent computations of the same quantity disagreed. This is
/// never expected; it means a bug in one of the routes. CLI exit code 2.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vnum
